#pragma once

#include "stringy/combinatorics.hpp"
#include "stringy/lpoly.hpp"

#include <cstdint>
#include <vector>

namespace stringy {

// One twisted-sector summand of the stringy E-polynomial: a non-trivial
// partition lambda of n, a standard angle type theta, and a reduced coset
// class with representative rep, together with the derived data entering
// the formula.
struct Sector {
  Partition lambda;
  AngleType theta;
  Permutation rep;
  std::vector<int> m;                             // block sizes of M(theta * rep)
  std::vector<std::pair<int, Partition>> components;
  int phi = 0;                                    // fiber rank, in {0,1,2}
  int age = 0;
  LPoly e_factor;
  int exponent = 0;                               // phi + r(lambda) + age
};

// Number of zeros among the two boundary slots theta_{p(1)}, theta_{p(r)}
// (a multiset: for r = 1 both slots read theta_1, giving 0 or 2).
int fiber_rank(const AngleType& theta, const Permutation& p);

// n - r + sum_j {theta_{p(j)} - theta_{p(j+1)}} + {1 - theta_{p(1)}}
// + theta_{p(r)}, with {t} the fractional part. Always an integer for
// angle types; throws std::domain_error otherwise.
int age(const Partition& lambda, const AngleType& theta, const Permutation& p);
Rat age_rational(const Partition& lambda, const AngleType& theta, const Permutation& p);

LPoly sector_polynomial(const Sector& s);

Sector make_sector(const Partition& lambda, const AngleType& theta,
                   const Permutation& rep);

// All twisted sectors for n >= 2: one per (lambda != (1^n), standard theta,
// reduced class), in deterministic order (lambda reverse-lex, theta lex,
// representative lex).
std::vector<Sector> enumerate_sectors(int n);

// Same multiset of contributions but with representatives chosen by a
// seeded RNG; the resulting total must not change.
std::vector<Sector> enumerate_sectors_randomized(int n, std::uint64_t seed);

} // namespace stringy
