#include "stringy/numeric.hpp"

#include <stdexcept>

namespace stringy {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }

Rat frac(const Rat& q) { return q - Rat(floor_rat(q)); }

Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

std::string rat_to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

} // namespace stringy
