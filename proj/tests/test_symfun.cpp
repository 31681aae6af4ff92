#include "stringy/symfun.hpp"

#include "doctest.h"

using namespace stringy;

namespace {

Partition part(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

LPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long x : coeffs) c.push_back(Int(x));
  return LPoly(std::move(c));
}

} // namespace

TEST_CASE("graded characters for small degrees") {
  // chi_1 = h1, chi_2 = h2 (1+q)
  HExpr chi1;
  chi1.add_term({1}, LPoly::one());
  CHECK(chi_a(1) == chi1);

  HExpr chi2;
  chi2.add_term({2}, poly({1, 1}));
  CHECK(chi_a(2) == chi2);

  HExpr chi3;
  chi3.add_term({3}, poly({1, 1, 1}));
  chi3.add_term({2, 1}, poly({0, 1}));
  CHECK(chi_a(3) == chi3);

  HExpr chi4;
  chi4.add_term({4}, poly({1, 1, 1, 1}));
  chi4.add_term({2, 2}, poly({0, 1, 1}));
  chi4.add_term({3, 1}, poly({0, 1, 1}));
  CHECK(chi_a(4) == chi4);
}

TEST_CASE("character rendering") {
  CHECK(chi_a(3).to_text() == "h3 + (h1*h2 + h3)*q + h3*q^2");
  CHECK(chi_a(1).to_text() == "h1");
  CHECK(chi_a(4).to_text() ==
        "h4 + (h2^2 + h1*h3 + h4)*q + (h2^2 + h1*h3 + h4)*q^2 + h4*q^3");
}

TEST_CASE("hall pairings by matrix counting") {
  CHECK(hall_pair(part({2, 1}), part({3})) == 1);
  CHECK(hall_pair(part({2, 1}), part({2, 1})) == 2);
  CHECK(hall_pair(part({1, 1}), part({2})) == 1);
  CHECK(hall_pair(part({1, 1, 1}), part({1, 1, 1})) == 6);
  CHECK(hall_pair(part({2}), part({1, 1, 1})) == 0); // different degrees
}

TEST_CASE("hall pairing is symmetric") {
  for (int r = 1; r <= 6; ++r) {
    const auto ps = partitions_of(r);
    for (const auto& mu : ps)
      for (const auto& nu : ps) CHECK(hall_pair(mu, nu) == hall_pair(nu, mu));
  }
}

TEST_CASE("hall inner products against the worked value") {
  CHECK(hall_inner(part({2, 1}), chi_a(3)) == poly({1, 3, 1}));
  HExpr inhomogeneous = HExpr::h(2) + HExpr::h(3);
  CHECK_THROWS_AS(hall_inner(part({2}), inhomogeneous), std::invalid_argument);
}

TEST_CASE("quotient E-polynomials") {
  CHECK(quotient_e(2, part({2})) == poly({1, 1}));
  CHECK(quotient_e(3, part({2, 1})) == poly({1, 3, 1}));
  // trivial group: total cohomology has dimension r!
  for (int r = 1; r <= 5; ++r) {
    std::vector<int> ones(static_cast<size_t>(r), 1);
    long factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    CHECK(quotient_e(r, Partition(ones)).eval(Int(1)) == factorial);
  }
}

TEST_CASE("full symmetric quotient is a binomial power") {
  for (int n = 1; n <= 7; ++n) {
    const LPoly e = quotient_e(n, part({n}));
    CHECK(e == (LPoly::one() + LPoly::var()).pow(static_cast<unsigned>(n - 1)));
    Int binom = 1;
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(e.coeff(k) == binom);
      binom = binom * (n - 1 - k) / (k + 1);
    }
  }
}

TEST_CASE("quotient E-polynomials are palindromic") {
  for (int r = 1; r <= 6; ++r)
    for (const auto& mu : partitions_of(r)) {
      const LPoly e = quotient_e(r, mu);
      CHECK(e.degree() == r - 1);
      CHECK(e.is_palindromic());
    }
}

TEST_CASE("component products") {
  CHECK(component_e({{3, part({2, 1})}}) == poly({1, 3, 1}));
  CHECK(component_e({{1, part({1})}, {1, part({1})}}) == LPoly::one());
  CHECK(component_e({{2, part({2})}, {2, part({2})}}) == poly({1, 2, 1}));
}
