#pragma once

#include "stringy/coxeter.hpp"
#include "stringy/partition.hpp"
#include "stringy/report.hpp"
#include "stringy/setpartition.hpp"

#include <vector>

namespace stringy {

// Finite permutation group acting on an embedded Coxeter fan through the
// lattice realization.
struct GroupOnFan {
  CoxeterFan fan;
  std::vector<Permutation> elements;
};

// Young subgroup of type mu on the Coxeter fan of A_{r-1}, blocks taken
// consecutively.
GroupOnFan young_group_on_fan(int r, const Partition& mu);

// Trace-weighted E-polynomial: sum over g-stable cones sigma of
// det(L*I - g|M(sigma)) with M(sigma) the character lattice of the orbit.
// Throws std::invalid_argument if g does not stabilize the fan.
LPoly equivariant_e(const CoxeterFan& fan, const IntMat& g);
LPoly equivariant_e(const CoxeterFan& fan, const Permutation& w);

// Burnside average of equivariant_e over the group; asserts integrality.
LPoly burnside_quotient_e(const GroupOnFan& group);

// For every r <= r_max and mu |- r: compare burnside_quotient_e with the
// character-formula value quotient_e(r, mu).
struct QuotientCheckRow {
  int r = 0;
  Partition mu;
  LPoly formula;
  LPoly oracle;
  bool match = false;
};
std::vector<QuotientCheckRow> crosscheck_quotients(int r_max);
CheckReport crosscheck_report(int r_max);

// Independent evaluation of the full twisted part of the stringy
// E-polynomial straight from the fixed-locus geometry: for each nontrivial
// class it enumerates every angle type, detects the pointwise-fixed torus
// orbits of the corresponding translation inside the braid model of the
// Coxeter fan, and Burnside-averages the trace-weighted orbit sums over
// the full cycle-permuting group. No standard-angle-type reduction, coset
// classification, or character formula enters.
LPoly twisted_sector_oracle(int n);

} // namespace stringy
