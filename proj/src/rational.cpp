#include "gds/rational.hpp"

#include <stdexcept>

namespace gds {

std::string to_pq(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational parse_pq(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    Int p{std::string(s.substr(0, slash))};
    Int q{std::string(s.substr(slash + 1))};
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  }
}

}  // namespace gds
