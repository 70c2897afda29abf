#include "gds/lift.hpp"

#include <map>
#include <stdexcept>

namespace gds {

TorusLift lift(const DirichletPolynomial& d, const BohrDecomposition& dec) {
  if (d.support_end() > dec.rows.size())
    throw std::out_of_range("support outside decomposition");
  TorusLift f;
  f.basis_size = dec.rows.empty() ? 0 : dec.rows.front().size();
  for (const auto& [n, a] : d.terms()) {
    std::vector<Int> row(f.basis_size);
    for (std::size_t k = 0; k < f.basis_size; ++k) {
      const Rational& x = dec.rows[n][k];
      if (denominator(x) != 1)
        throw std::invalid_argument("non-integer decomposition row");
      row[k] = numerator(x);
    }
    f.rows.push_back(std::move(row));
    f.coeffs.push_back(a);
    f.indices.push_back(n);
  }
  return f;
}

DirichletPolynomial inverse_lift(const TorusLift& f, const FrequencyPtr& freq,
                                 const BohrDecomposition& dec) {
  std::map<std::vector<Int>, std::size_t> row_to_index;
  for (std::size_t n = 0; n < dec.rows.size(); ++n) {
    std::vector<Int> row(dec.rows[n].size());
    bool integral = true;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (denominator(dec.rows[n][k]) != 1) {
        integral = false;
        break;
      }
      row[k] = numerator(dec.rows[n][k]);
    }
    if (integral) row_to_index.emplace(std::move(row), n);
  }
  DirichletPolynomial d(freq);
  for (std::size_t t = 0; t < f.rows.size(); ++t) {
    auto it = row_to_index.find(f.rows[t]);
    if (it == row_to_index.end())
      throw std::invalid_argument("exponent vector not present in decomposition");
    d.set(it->second, f.coeffs[t]);
  }
  return d;
}

Int ordinary_index(const std::vector<Int>& row,
                   const std::vector<Int>& primes) {
  if (row.size() > primes.size())
    throw std::invalid_argument("row longer than prime list");
  Int n = 1;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] < 0) throw std::invalid_argument("negative exponent");
    for (Int e = 0; e < row[j]; ++e) n *= primes[j];
  }
  return n;
}

std::vector<Int> ordinary_primes(const Frequency& freq) {
  if (freq.family() != FamilyTag::ordinary)
    throw std::invalid_argument("ordinary frequency required");
  std::vector<Int> primes;
  for (const auto& s : freq.symbols()) {
    // symbols are named "log<p>"
    primes.emplace_back(s.name.substr(3));
  }
  return primes;
}

}  // namespace gds
