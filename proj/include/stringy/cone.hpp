#pragma once

#include "stringy/intmat.hpp"

#include <string>
#include <vector>

namespace stringy {

using Vec = std::vector<Int>;

// v / gcd(entries), direction preserved
Vec primitive(Vec v);

// Extreme rays of { x : ineqs * x >= 0, eqs * x = 0 }. The inequality and
// equation lists may be redundant. Throws std::invalid_argument if the set
// contains a line.
std::vector<Vec> dd_extreme_rays(const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs, int ambient);

// Strictly convex rational polyhedral cone with primitive extreme-ray
// generators kept sorted, so equal cones compare equal.
class Cone {
 public:
  Cone() : ambient_(0) {}
  // generators may be redundant; they are reduced to the extreme rays
  Cone(int ambient, std::vector<Vec> generators);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }

  // facet normals, valid together with the span equations
  const std::vector<Vec>& facets() const { return facets_; }
  const std::vector<Vec>& span_equations() const { return span_eqs_; }

  bool contains(const Vec& v) const;
  bool has_ray(const Vec& v) const;

  // faces cut out by the facets tight on all of `rays_subset`
  Cone face_through(const std::vector<Vec>& rays_subset) const;
  bool is_face(const Cone& f) const;
  Cone intersect(const Cone& o) const;

  bool is_unimodular() const;   // simplicial of full rank with |det| = 1

  bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const { return rays_ < o.rays_; }

  std::string to_string() const;

 private:
  int ambient_;
  int dim_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> facets_;
  std::vector<Vec> span_eqs_;
};

Cone cone_from_matrix_columns(const IntMat& m);

// The fiber product sigma_1 x_{Nbar} sigma_2: pairs (v1, v2) with v_i in
// sigma_i and h1 v1 = h2 v2, expressed in a basis of the fiber-product
// lattice. `embedding` maps those coordinates back into
// Z^{ambient(sigma1) + ambient(sigma2)}.
struct FiberProductCone {
  Cone cone;
  IntMat embedding;
};

// h1, h2 must be surjective and carry the two cones onto the same image
// cone; throws std::invalid_argument otherwise.
FiberProductCone fiber_product_cones(const Cone& sigma1, const IntMat& h1,
                                     const Cone& sigma2, const IntMat& h2);

} // namespace stringy
