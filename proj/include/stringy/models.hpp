#pragma once

#include "stringy/fan.hpp"
#include "stringy/report.hpp"

#include <vector>

namespace stringy {

// Generator matrix of the cone of the n-fold fiber product of the
// double-point degeneration xy = t: (n+1) x 2^n, column j determined by
// the binary digits of j.
IntMat product_cone_matrix_d2(int n);

// Triple-point analogue x1 x2 x3 = t: (2n+1) x 3^n.
IntMat product_cone_matrix_d3(int n);

// Generators of the dual cone of product_cone_matrix_d2(n): the columns
// (e0, e1, e0+e1-e2, e2, ..., e0+e1-en, en), (n+1) x 2n.
IntMat dual_cone_generators_d2(int n);

// Change of basis taking the d2 cone generators to the vector-bundle block
// form over the Coxeter fan.
IntMat coxeter_change_of_basis(int n);

// Generators of the distinguished maximal cone of the subdivided fan:
// columns e0, e1, e1+e2, ..., e1+...+en.
IntMat distinguished_chamber_matrix(int n);

// The lattice map to the degeneration base, the row (1 1 0 ... 0).
IntMat base_map_row(int n);

// Projection N -> Z^{n-1} under which the subdivided fan maps onto the
// Coxeter fan: middle rows of coxeter_change_of_basis.
IntMat bundle_projection(int n);

// Matrices of the adjacent transpositions (k k+1), k = 1..n-1, acting on
// N = Z^{n+1}; they generate a group of order n!.
std::vector<IntMat> symmetric_action_generators(int n);

// Matrices of the adjacent transpositions acting on the Coxeter lattice
// Z^{r-1} (0/1 weight-vector realization).
std::vector<IntMat> coxeter_action_generators(int r);

// Full group generated by a list of matrices (breadth-first closure).
std::vector<IntMat> group_closure(const std::vector<IntMat>& gens);

Cone product_cone_d2(int n);

// Consecutive star subdivisions of the d2 cone at its first 2^n - 1
// columns, in column order. Geometric construction, practical for n <= 5.
Fan build_small_resolution_fan(int n);

// Iterated fiber product of n copies of the curve cone (d=2) or of the
// coordinate cone of C^3 (d=3) over the base line, together with the
// composed embedding into the flat lattice Z^{2n} (resp. Z^{3n}).
FiberProductCone iterated_fiber_product_d2(int n);
FiberProductCone iterated_fiber_product_d3(int n);

// Explicit bases of the fiber-product lattices under which the iterated
// cones become the column cones of the product matrices.
IntMat fiber_basis_d2(int n);
IntMat fiber_basis_d3(int n);

// Structural verifications
CheckReport verify_bundle_structure(int n);
CheckReport multiplicity_check(int n);
CheckReport fiber_product_check(int n);   // d2 for n, d3 for min(n,3)
CheckReport fan_suite(int n);             // n <= 4 geometric, 5..6 combinatorial

} // namespace stringy
