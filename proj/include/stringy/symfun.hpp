#pragma once

#include "stringy/lpoly.hpp"
#include "stringy/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace stringy {

// Element of the complete-homogeneous basis with polynomial coefficients in
// q. Keys are h-monomials as multisets of positive degrees, sorted
// decreasingly; the empty key is the constant term h of degree 0. The
// coefficient polynomials reuse LPoly with L read as q.
class HExpr {
 public:
  using Monomial = std::vector<int>;

  static HExpr one();
  static HExpr h(int m);

  void add_term(Monomial mono, const LPoly& coeff);
  HExpr operator+(const HExpr& o) const;
  HExpr operator*(const HExpr& o) const;
  HExpr scaled(const LPoly& q_poly) const;

  const std::map<Monomial, LPoly>& terms() const { return terms_; }
  bool operator==(const HExpr& o) const { return terms_ == o.terms_; }

  // degree if every monomial has the same total degree, else -1
  int homogeneous_degree() const;

  // "h3 + (h1*h2 + h3)*q + h3*q^2": ascending q powers; inside each
  // coefficient, monomials ascend lexicographically.
  std::string to_text() const;

 private:
  std::map<Monomial, LPoly> terms_;
};

// Graded character of the cohomology of the A_{n-1} Coxeter toric variety,
// chi[A_{n-1}, q], from the recursion
//   chi_n = h_n + sum_{m=2..n} (q + ... + q^{m-1}) h_m chi_{n-m},
// chi_0 = 1.
HExpr chi_a(int n);

// <h_mu, h_nu> = number of matrices with non-negative integer entries, row
// sums mu and column sums nu.
Int hall_pair(const Partition& mu, const Partition& nu);

// <h_mu, X> with q specialized to L. X must be homogeneous of degree
// mu.n(); throws std::invalid_argument otherwise.
LPoly hall_inner(const Partition& mu, const HExpr& x);

// E-polynomial of the quotient of the A_{r-1} Coxeter toric variety by the
// Young subgroup of type mu: <h_mu, chi[A_{r-1}, L]>.
LPoly quotient_e(int r, const Partition& mu);

// Product of quotient_e over the components (r_j, mu_j).
LPoly component_e(const std::vector<std::pair<int, Partition>>& components);

} // namespace stringy
