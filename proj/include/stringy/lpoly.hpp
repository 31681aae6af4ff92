#pragma once

#include "stringy/numeric.hpp"

#include <string>
#include <vector>

namespace stringy {

// Univariate polynomial in L with exact integer coefficients, stored in
// ascending order with no trailing zeros. The zero polynomial has an empty
// coefficient vector and degree() == -1.
class LPoly {
 public:
  LPoly() = default;
  explicit LPoly(Int constant);
  explicit LPoly(std::vector<Int> coeffs);

  static LPoly zero() { return LPoly(); }
  static LPoly one() { return LPoly(Int(1)); }
  static LPoly var();                       // L
  static LPoly monomial(int k, Int c = Int(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  LPoly operator+(const LPoly& o) const;
  LPoly operator-(const LPoly& o) const;
  LPoly operator*(const LPoly& o) const;
  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);

  LPoly scaled(const Int& c) const;
  LPoly shifted(int k) const;               // multiply by L^k
  LPoly pow(unsigned e) const;
  Int eval(const Int& x) const;

  // exact quotient; throws std::domain_error if o does not divide *this
  LPoly divide_exact(const LPoly& o) const;

  bool operator==(const LPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LPoly& o) const { return c_ != o.c_; }

  bool is_palindromic() const;              // c_k == c_{deg-k}
  bool nonnegative_coeffs() const;
  int lowest_exponent() const;              // -1 for zero

  // "L^9 + 4L^8 + 11L^7 + 14L^6 + 4L^5", descending powers
  std::string to_text() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

LPoly operator*(const Int& c, const LPoly& p);

// Polynomial with exact rational coefficients; intermediate values of
// Burnside averages before the division by the group order resolves.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const LPoly& p);

  QPoly& operator+=(const QPoly& o);
  QPoly& add_scaled(const LPoly& p, const Rat& c);
  QPoly scaled(const Rat& c) const;

  // throws std::domain_error if any coefficient is non-integral
  LPoly to_lpoly() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

} // namespace stringy
