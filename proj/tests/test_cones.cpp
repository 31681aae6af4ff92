#include "stringy/cone.hpp"
#include "stringy/fan.hpp"
#include "stringy/models.hpp"

#include "doctest.h"

#include <set>

using namespace stringy;

namespace {

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

} // namespace

TEST_CASE("primitive vectors") {
  CHECK(primitive(vec({2, 4, 6})) == vec({1, 2, 3}));
  CHECK(primitive(vec({0, -2, 4})) == vec({0, -1, 2}));
}

TEST_CASE("redundant generators are removed") {
  const Cone c(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 2})});
  CHECK(c.rays() == std::vector<Vec>{vec({0, 1}), vec({1, 0})});
  CHECK(c.dim() == 2);
  CHECK(c.contains(vec({3, 5})));
  CHECK_FALSE(c.contains(vec({-1, 0})));
}

TEST_CASE("lower-dimensional cones carry span equations") {
  const Cone ray(3, {vec({1, 1, 0})});
  CHECK(ray.dim() == 1);
  CHECK(ray.contains(vec({2, 2, 0})));
  CHECK_FALSE(ray.contains(vec({1, 1, 1})));
  CHECK_FALSE(ray.contains(vec({-1, -1, 0})));
  const Cone zero(3, std::vector<Vec>{});
  CHECK(zero.dim() == 0);
  CHECK(zero.contains(vec({0, 0, 0})));
  CHECK_FALSE(zero.contains(vec({1, 0, 0})));
}

TEST_CASE("lines are rejected") {
  CHECK_THROWS_AS(Cone(2, {vec({1, 0}), vec({-1, 0})}), std::invalid_argument);
}

TEST_CASE("faces and intersections") {
  const Cone square(3, {vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1})});
  CHECK(square.rays().size() == 4);
  CHECK(square.facets().size() == 4);
  const Cone edge = square.face_through({vec({1, 0, 1})});
  CHECK(edge.rays() == std::vector<Vec>{vec({1, 0, 1})});
  CHECK(square.is_face(edge));
  CHECK(square.is_face(Cone(3, std::vector<Vec>{})));
  CHECK(square.is_face(Cone(3, {vec({1, 0, 1}), vec({0, 1, 1})})));
  // opposite rays span a diagonal slice, not a face
  CHECK_FALSE(square.is_face(Cone(3, {vec({1, 0, 1}), vec({-1, 0, 1})})));

  const Cone other(3, {vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 1})});
  const Cone meet = square.intersect(other);
  CHECK(meet.rays() == std::vector<Vec>{vec({0, 1, 1}), vec({1, 0, 1})});
}

TEST_CASE("dual description matches the explicit dual generators") {
  for (int n = 1; n <= 4; ++n) {
    const IntMat c2 = product_cone_matrix_d2(n);
    std::vector<Vec> gens;
    for (int j = 0; j < c2.cols(); ++j) gens.push_back(c2.col(j));
    const std::vector<Vec> dual_rays = dd_extreme_rays(gens, {}, n + 1);
    CHECK(Cone(n + 1, dual_rays) == cone_from_matrix_columns(dual_cone_generators_d2(n)));
  }
}

TEST_CASE("star subdivision keeps smooth cones subdivided at their own rays") {
  Fan fan;
  fan.ambient = 2;
  fan.maximal.push_back(Cone(2, {vec({1, 0}), vec({0, 1})}));
  const Fan same = star_subdivide(fan, vec({1, 0}));
  REQUIRE(same.maximal.size() == 1);
  CHECK(same.maximal[0] == fan.maximal[0]);
  CHECK_THROWS_AS(star_subdivide(fan, vec({-1, 0})), std::invalid_argument);
}

TEST_CASE("subdividing the square cone splits it in two") {
  Fan fan;
  fan.ambient = 3;
  fan.maximal.push_back(product_cone_d2(2));
  const Fan split = star_subdivide(fan, vec({1, 0, 0}));
  CHECK(split.maximal.size() == 2);
  CHECK(split.intersections_are_faces());
}

TEST_CASE("fiber product of two curve cones is the n=2 product cone") {
  const Cone curve(2, {vec({1, 0}), vec({0, 1})});
  IntMat h(1, 2);
  h.at(0, 0) = 1;
  h.at(0, 1) = 1;
  const FiberProductCone fp = fiber_product_cones(curve, h, curve, h);
  CHECK(fp.cone.rays().size() == 4);
  // in the explicit basis the rays are the columns of the product matrix
  std::set<Vec> rebased;
  for (const auto& r : fp.cone.rays()) {
    auto coords = solve_integral(fiber_basis_d2(2), fp.embedding.apply(r));
    REQUIRE(coords.has_value());
    rebased.insert(*coords);
  }
  std::set<Vec> expect;
  const IntMat c2 = product_cone_matrix_d2(2);
  for (int j = 0; j < c2.cols(); ++j) expect.insert(c2.col(j));
  CHECK(rebased == expect);
}

TEST_CASE("fiber product over the zero-rank base is the direct product") {
  const Cone curve(2, {vec({1, 0}), vec({0, 1})});
  const IntMat trivial(0, 2);
  const FiberProductCone fp = fiber_product_cones(curve, trivial, curve, trivial);
  CHECK(fp.cone.ambient() == 4);
  CHECK(fp.cone.rays().size() == 4);
  CHECK(fp.cone.dim() == 4);
}

TEST_CASE("mismatched images are rejected") {
  const Cone curve(2, {vec({1, 0}), vec({0, 1})});
  const Cone negative(2, {vec({-1, 0}), vec({0, -1})});
  IntMat h(1, 2);
  h.at(0, 0) = 1;
  h.at(0, 1) = 1;
  CHECK_THROWS_AS(fiber_product_cones(curve, h, negative, h), std::invalid_argument);
  IntMat not_surjective(1, 2);
  not_surjective.at(0, 0) = 2;
  CHECK_THROWS_AS(fiber_product_cones(curve, not_surjective, curve, not_surjective),
                  std::invalid_argument);
}

TEST_CASE("fan json dump shape") {
  Fan fan;
  fan.ambient = 2;
  fan.maximal.push_back(Cone(2, {vec({1, 0}), vec({0, 1})}));
  CHECK(fan.to_json() ==
        "{\"ambient_rank\":2,\"rays\":[[0,1],[1,0]],\"maximal_cones\":[[0,1]]}");
}
