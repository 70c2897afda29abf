#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gds {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_dec_float_50;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Real& r) { return r.convert_to<double>(); }

// "p/q" (or just "p" when q == 1), canonical sign on the numerator.
std::string to_pq(const Rational& r);
Rational parse_pq(std::string_view s);

}  // namespace gds
