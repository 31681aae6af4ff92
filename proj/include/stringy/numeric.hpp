#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stringy {

// Exact arbitrary-precision integers and rationals. No floating point
// appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_div(const Int& a, const Int& b);

Int floor_rat(const Rat& q);

// {q} = q - floor(q), always in [0,1)
Rat frac(const Rat& q);

Int gcd_int(const Int& a, const Int& b);

// "0", "1/2", "-2/3"
std::string rat_to_string(const Rat& q);

} // namespace stringy
