#pragma once

#include "stringy/cone.hpp"

#include <string>
#include <vector>

namespace stringy {

// Fan represented by its maximal cones; rays and pairwise intersections
// are derived on demand.
struct Fan {
  int ambient = 0;
  std::vector<Cone> maximal;

  // union of the extreme rays of the maximal cones, sorted
  std::vector<Vec> rays() const;

  bool supports(const Vec& v) const;

  // {ambient_rank, rays (sorted lexicographically), maximal_cones as ray
  // index lists}
  std::string to_json() const;

  // every pairwise intersection of maximal cones is a face of both
  bool intersections_are_faces() const;
};

// Standard star subdivision at a primitive ray in the support. Cones not
// containing the ray are kept; a cone containing it is replaced by the
// cones over its facets that miss the ray.
Fan star_subdivide(const Fan& fan, const Vec& ray);

} // namespace stringy
