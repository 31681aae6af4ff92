#include "stringy/models.hpp"

#include "stringy/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stringy {

IntMat product_cone_matrix_d2(int n) {
  if (n < 1) throw std::invalid_argument("product_cone_matrix_d2: n must be positive");
  IntMat m(n + 1, 1 << n);
  for (int j = 0; j < (1 << n); ++j) {
    m.at(0, j) = 1 - (j & 1);
    m.at(1, j) = j & 1;
    for (int k = 2; k <= n; ++k) m.at(k, j) = (j >> (k - 1)) & 1;
  }
  return m;
}

IntMat product_cone_matrix_d3(int n) {
  if (n < 1) throw std::invalid_argument("product_cone_matrix_d3: n must be positive");
  int cols = 1;
  for (int i = 0; i < n; ++i) cols *= 3;
  IntMat m(2 * n + 1, cols);
  for (int j = 0; j < cols; ++j) {
    int digits = j;
    const int d0 = digits % 3;
    digits /= 3;
    m.at(0, j) = d0 == 0;
    m.at(1, j) = d0 == 1;
    m.at(2, j) = d0 == 2;
    for (int k = 2; k <= n; ++k) {
      const int dk = digits % 3;
      digits /= 3;
      m.at(2 * k - 1, j) = dk == 1;
      m.at(2 * k, j) = dk == 2;
    }
  }
  return m;
}

IntMat dual_cone_generators_d2(int n) {
  IntMat m(n + 1, 2 * n);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  for (int j = 2; j <= n; ++j) {
    m.at(0, 2 * j - 2) = 1;
    m.at(1, 2 * j - 2) = 1;
    m.at(j, 2 * j - 2) = -1;
    m.at(j, 2 * j - 1) = 1;
  }
  return m;
}

IntMat coxeter_change_of_basis(int n) {
  IntMat q(n + 1, n + 1);
  q.at(0, 0) = 1;
  q.at(0, 1) = 1;
  q.at(0, n) = -1;
  for (int i = 1; i < n; ++i) {
    q.at(i, i) = 1;
    q.at(i, n) = -1;
  }
  q.at(n, n) = 1;
  return q;
}

IntMat distinguished_chamber_matrix(int n) {
  IntMat m(n + 1, n + 1);
  m.at(0, 0) = 1;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) m.at(i, j) = 1;
  return m;
}

IntMat base_map_row(int n) {
  IntMat g(1, n + 1);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  return g;
}

IntMat bundle_projection(int n) {
  const IntMat q = coxeter_change_of_basis(n);
  IntMat p(n - 1, n + 1);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j <= n; ++j) p.at(i - 1, j) = q.at(i, j);
  return p;
}

std::vector<IntMat> symmetric_action_generators(int n) {
  if (n < 2) throw std::invalid_argument("symmetric_action_generators: n must be at least 2");
  std::vector<IntMat> gens;
  {
    IntMat m = IntMat::identity(n + 1);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = -1;
    m.at(1, 1) = 0; m.at(1, 2) = 1;
    m.at(2, 1) = 1; m.at(2, 2) = 0;
    gens.push_back(m);
  }
  for (int k = 2; k < n; ++k) {
    IntMat m = IntMat::identity(n + 1);
    m.at(k, k) = 0; m.at(k, k + 1) = 1;
    m.at(k + 1, k) = 1; m.at(k + 1, k + 1) = 0;
    gens.push_back(m);
  }
  return gens;
}

std::vector<IntMat> coxeter_action_generators(int r) {
  CoxeterFan fan(r);
  std::vector<IntMat> gens;
  for (int k = 0; k + 1 < r; ++k) {
    std::vector<int> img(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) img[static_cast<size_t>(i)] = i;
    std::swap(img[static_cast<size_t>(k)], img[static_cast<size_t>(k + 1)]);
    gens.push_back(fan.action_matrix(Permutation(img)));
  }
  return gens;
}

namespace {

std::vector<Int> flatten(const IntMat& m) {
  std::vector<Int> key;
  key.reserve(static_cast<size_t>(m.rows()) * m.cols() + 2);
  key.push_back(m.rows());
  key.push_back(m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j));
  return key;
}

} // namespace

std::vector<IntMat> group_closure(const std::vector<IntMat>& gens) {
  if (gens.empty()) return {};
  std::map<std::vector<Int>, IntMat> seen;
  const IntMat id = IntMat::identity(gens[0].rows());
  seen.emplace(flatten(id), id);
  std::vector<IntMat> frontier{id};
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IntMat prod = g * m;
        auto key = flatten(prod);
        if (seen.emplace(key, prod).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  std::vector<IntMat> out;
  out.reserve(seen.size());
  for (auto& [key, m] : seen) out.push_back(std::move(m));
  return out;
}

Cone product_cone_d2(int n) { return cone_from_matrix_columns(product_cone_matrix_d2(n)); }

Fan build_small_resolution_fan(int n) {
  const IntMat c = product_cone_matrix_d2(n);
  Fan fan;
  fan.ambient = n + 1;
  fan.maximal.push_back(product_cone_d2(n));
  for (int j = 0; j + 1 < c.cols(); ++j) fan = star_subdivide(fan, c.col(j));
  return fan;
}

namespace {

FiberProductCone iterate_products(int n, const Cone& factor, const IntMat& base_map) {
  const int fdim = factor.ambient();
  FiberProductCone acc;
  acc.cone = factor;
  acc.embedding = IntMat::identity(fdim);
  IntMat to_base = base_map; // map from the current lattice to the base line
  for (int step = 2; step <= n; ++step) {
    FiberProductCone next = fiber_product_cones(acc.cone, to_base, factor, base_map);
    // compose embeddings: block(acc.embedding, I) * step embedding
    const int prev_flat = acc.embedding.rows();
    IntMat block(prev_flat + fdim, acc.embedding.cols() + fdim);
    for (int i = 0; i < prev_flat; ++i)
      for (int j = 0; j < acc.embedding.cols(); ++j) block.at(i, j) = acc.embedding.at(i, j);
    for (int i = 0; i < fdim; ++i) block.at(prev_flat + i, acc.embedding.cols() + i) = 1;
    IntMat embed = block * next.embedding;

    // the map to the base from the new lattice reads off the last factor
    IntMat last(1, acc.cone.ambient() + fdim);
    for (int j = 0; j < fdim; ++j) last.at(0, acc.cone.ambient() + j) = base_map.at(0, j);
    to_base = last * next.embedding;

    acc.cone = next.cone;
    acc.embedding = std::move(embed);
  }
  return acc;
}

} // namespace

FiberProductCone iterated_fiber_product_d2(int n) {
  const Cone curve(2, {Vec{Int(1), Int(0)}, Vec{Int(0), Int(1)}});
  IntMat h(1, 2);
  h.at(0, 0) = 1;
  h.at(0, 1) = 1;
  return iterate_products(n, curve, h);
}

FiberProductCone iterated_fiber_product_d3(int n) {
  const Cone octant(3, {Vec{Int(1), Int(0), Int(0)}, Vec{Int(0), Int(1), Int(0)},
                        Vec{Int(0), Int(0), Int(1)}});
  IntMat h(1, 3);
  h.at(0, 0) = 1;
  h.at(0, 1) = 1;
  h.at(0, 2) = 1;
  return iterate_products(n, octant, h);
}

IntMat fiber_basis_d2(int n) {
  IntMat b(2 * n, n + 1);
  for (int slot = 0; slot < n; ++slot) b.at(2 * slot, 0) = 1;       // (d1,...,d1)
  b.at(1, 1) = 1;                                                   // (d2,d1,...)
  for (int slot = 1; slot < n; ++slot) b.at(2 * slot, 1) = 1;
  for (int j = 2; j <= n; ++j) {
    b.at(2 * (j - 1), j) = -1;                                      // d2-d1 at slot j
    b.at(2 * (j - 1) + 1, j) = 1;
  }
  return b;
}

IntMat fiber_basis_d3(int n) {
  IntMat b(3 * n, 2 * n + 1);
  for (int slot = 0; slot < n; ++slot) b.at(3 * slot, 0) = 1;
  b.at(1, 1) = 1;
  for (int slot = 1; slot < n; ++slot) b.at(3 * slot, 1) = 1;
  b.at(2, 2) = 1;
  for (int slot = 1; slot < n; ++slot) b.at(3 * slot, 2) = 1;
  for (int j = 2; j <= n; ++j) {
    b.at(3 * (j - 1), 2 * j - 1) = -1;                              // d2-d1
    b.at(3 * (j - 1) + 1, 2 * j - 1) = 1;
    b.at(3 * (j - 1), 2 * j) = -1;                                  // d3-d1
    b.at(3 * (j - 1) + 2, 2 * j) = 1;
  }
  return b;
}

namespace {

std::set<Vec> column_set(const IntMat& m) {
  std::set<Vec> s;
  for (int j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  return s;
}

bool rebased_rays_match(const FiberProductCone& fp, const IntMat& basis,
                        const IntMat& target_columns) {
  std::set<Vec> got;
  for (const auto& ray : fp.cone.rays()) {
    const Vec flat = fp.embedding.apply(ray);
    auto coords = solve_integral(basis, flat);
    if (!coords) return false;
    got.insert(primitive(*coords));
  }
  return got == column_set(target_columns);
}

} // namespace

CheckReport fiber_product_check(int n) {
  CheckReport rep;
  {
    const FiberProductCone fp = iterated_fiber_product_d2(n);
    rep.add("d2 iterated fiber product matches the product cone (n=" + std::to_string(n) + ")",
            rebased_rays_match(fp, fiber_basis_d2(n), product_cone_matrix_d2(n)));
  }
  const int n3 = std::min(n, 3);
  {
    const FiberProductCone fp = iterated_fiber_product_d3(n3);
    rep.add("d3 iterated fiber product matches the product cone (n=" + std::to_string(n3) + ")",
            rebased_rays_match(fp, fiber_basis_d3(n3), product_cone_matrix_d3(n3)));
  }
  return rep;
}

CheckReport verify_bundle_structure(int n) {
  CheckReport rep;
  const IntMat c2 = product_cone_matrix_d2(n);
  const IntMat q = coxeter_change_of_basis(n);
  const IntMat m = q * c2;
  const int half = 1 << (n - 1);

  bool first_row_ok = true, last_row_ok = true;
  for (int j = 0; j < (1 << n); ++j) {
    if (m.at(0, j) != (j < half ? 1 : 0)) first_row_ok = false;
    if (m.at(n, j) != (j < half ? 0 : 1)) last_row_ok = false;
  }
  rep.add("first row of Q*C splits into ones then zeros", first_row_ok);
  rep.add("last row of Q*C splits into zeros then ones", last_row_ok);

  CoxeterFan cox(n);
  std::set<Vec> expected_pos;
  expected_pos.insert(Vec(static_cast<size_t>(n - 1), Int(0)));
  for (const auto& w : cox.positive_rays()) expected_pos.insert(w);
  std::set<Vec> got_pos, got_neg;
  for (int j = 0; j < (1 << n); ++j) {
    Vec mid(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) mid[static_cast<size_t>(i - 1)] = m.at(i, j);
    if (j < half)
      got_pos.insert(std::move(mid));
    else {
      for (auto& x : mid) x = -x;
      got_neg.insert(std::move(mid));
    }
  }
  rep.add("middle rows list each positive weight vector once plus a zero column",
          got_pos == expected_pos && static_cast<int>(got_pos.size()) == half);
  rep.add("middle rows list each negative weight vector once plus a zero column",
          got_neg == expected_pos && static_cast<int>(got_neg.size()) == half);

  // image of the distinguished chamber
  {
    const IntMat qd = q * distinguished_chamber_matrix(n);
    bool ok = true;
    for (int i = 0; i <= n; ++i)
      if (qd.at(i, 0) != (i == 0 ? 1 : 0)) ok = false;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i <= n; ++i) {
        const Int expect = (i == 0 || (i >= 1 && i <= j)) ? 1 : 0;
        if (qd.at(i, j) != expect) ok = false;
      }
    for (int i = 0; i <= n; ++i)
      if (qd.at(i, n) != (i == n ? 1 : 0)) ok = false;
    rep.add("distinguished chamber maps to the triangular block form", ok);
  }

  // equivariance of the projection
  {
    const IntMat pi = bundle_projection(n);
    const auto up = symmetric_action_generators(n);
    const auto down = coxeter_action_generators(n);
    bool ok = up.size() == down.size();
    for (size_t i = 0; ok && i < up.size(); ++i)
      if (pi * up[i] != down[i] * pi) ok = false;
    rep.add("projection intertwines the symmetric-group actions", ok);
  }

  // each maximal cone maps onto a Weyl chamber: images of its rays are the
  // chamber generators once each plus two zeros
  if (n <= 4) {
    const Fan fan = build_small_resolution_fan(n);
    const IntMat pi = bundle_projection(n);
    std::set<OrderedSetPartition> chambers_hit;
    bool ok = true;
    const Vec zero(static_cast<size_t>(n - 1), Int(0));
    for (const auto& cone : fan.maximal) {
      std::multiset<Vec> images;
      for (const auto& ray : cone.rays()) images.insert(pi.apply(ray));
      if (images.count(zero) != 2) { ok = false; break; }
      std::set<Vec> nonzero;
      for (const auto& v : images)
        if (v != zero) nonzero.insert(v);
      if (nonzero.size() + 2 != images.size()) { ok = false; break; }
      bool matched = false;
      for (const auto& w : all_permutations(n)) {
        const auto gens = cox.generators(cox.chamber(w));
        if (std::set<Vec>(gens.begin(), gens.end()) == nonzero) {
          chambers_hit.insert(cox.chamber(w));
          matched = true;
          break;
        }
      }
      if (!matched) { ok = false; break; }
    }
    rep.add("every maximal cone projects onto a Weyl chamber",
            ok && chambers_hit.size() == fan.maximal.size());
  }
  return rep;
}

CheckReport multiplicity_check(int n) {
  CheckReport rep;
  const IntMat c2 = product_cone_matrix_d2(n);
  const IntMat g = base_map_row(n);
  bool mult_one = true;
  {
    const IntMat pairing = g * c2;
    for (int j = 0; j < pairing.cols(); ++j)
      if (pairing.at(0, j) != 1) mult_one = false;
  }
  rep.add("every generator pairs to one against the base form", mult_one);

  const auto gens = symmetric_action_generators(n);
  bool invariant = true;
  for (const auto& s : gens)
    if (g * s != g) invariant = false;
  rep.add("the base form is invariant under the symmetric action", invariant);

  // restriction to the kernel of g is the permutation representation in
  // the basis w_1 = e_1 - e_0, w_i = e_i (i >= 2)
  IntMat w(n + 1, n);
  w.at(0, 0) = -1;
  w.at(1, 0) = 1;
  for (int i = 2; i <= n; ++i) w.at(i, i - 1) = 1;
  bool perm_rep = true;
  for (const auto& s : gens) {
    IntMat r;
    try {
      r = restrict_action(s, w);
    } catch (const std::exception&) {
      perm_rep = false;
      break;
    }
    // permutation matrix: one 1 per row and column, all else 0
    std::vector<int> row_count(static_cast<size_t>(n), 0), col_count(static_cast<size_t>(n), 0);
    for (int i = 0; i < n && perm_rep; ++i)
      for (int j = 0; j < n; ++j) {
        if (r.at(i, j) == 0) continue;
        if (r.at(i, j) != 1) { perm_rep = false; break; }
        ++row_count[static_cast<size_t>(i)];
        ++col_count[static_cast<size_t>(j)];
      }
    for (int i = 0; i < n; ++i)
      if (row_count[static_cast<size_t>(i)] != 1 || col_count[static_cast<size_t>(i)] != 1)
        perm_rep = false;
    if (!perm_rep) break;
  }
  rep.add("the kernel of the base form carries the permutation representation", perm_rep);

  if (n <= 4) {
    const Fan fan = build_small_resolution_fan(n);
    bool ray_mult = true;
    for (const auto& ray : fan.rays()) {
      Int p = 0;
      for (int j = 0; j <= n; ++j) p += g.at(0, j) * ray[static_cast<size_t>(j)];
      if (p != 1) ray_mult = false;
    }
    rep.add("every fan ray has multiplicity one", ray_mult);
  }
  return rep;
}

CheckReport fan_suite(int n) {
  CheckReport rep;
  if (n <= 4) {
    const Fan fan = build_small_resolution_fan(n);
    int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    rep.add("subdivided fan has n! maximal cones",
            static_cast<int>(fan.maximal.size()) == factorial,
            std::to_string(fan.maximal.size()) + " cones");
    bool unimodular = true;
    for (const auto& c : fan.maximal)
      if (!c.is_unimodular()) unimodular = false;
    rep.add("every maximal cone is unimodular", unimodular);

    const std::vector<Vec> fan_rays = fan.rays();
    rep.add("fan rays equal the product cone columns",
            std::set<Vec>(fan_rays.begin(), fan_rays.end()) ==
                column_set(product_cone_matrix_d2(n)));

    const Cone delta = cone_from_matrix_columns(distinguished_chamber_matrix(n));
    bool found = false;
    for (const auto& c : fan.maximal)
      if (c == delta) found = true;
    rep.add("the distinguished chamber is a maximal cone", found);

    const auto group = group_closure(symmetric_action_generators(n));
    rep.add("action matrices generate a group of order n!",
            static_cast<int>(group.size()) == factorial);

    std::set<Cone> cone_set(fan.maximal.begin(), fan.maximal.end());
    bool permutes = true;
    std::set<Cone> orbit;
    int stabilizer = 0;
    for (const auto& mat : group) {
      for (const auto& c : fan.maximal) {
        std::vector<Vec> moved;
        for (const auto& ray : c.rays()) moved.push_back(mat.apply(ray));
        Cone image(n + 1, moved);
        if (!cone_set.count(image)) permutes = false;
        if (c == delta) {
          orbit.insert(image);
          if (image == delta) ++stabilizer;
        }
      }
    }
    rep.add("the group permutes the maximal cones", permutes);
    rep.add("the action on maximal cones is simply transitive",
            static_cast<int>(orbit.size()) == factorial && stabilizer == 1);

    const auto bundle = verify_bundle_structure(n);
    for (const auto& item : bundle.items) rep.items.push_back(item);
    const auto mult = multiplicity_check(n);
    for (const auto& item : mult.items) rep.items.push_back(item);
    const auto fiber = fiber_product_check(n);
    for (const auto& item : fiber.items) rep.items.push_back(item);

    rep.add("maximal cones intersect in common faces", fan.intersections_are_faces());
  } else {
    // combinatorial checks only
    CoxeterFan cox(n);
    int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    int chambers = 0;
    for (const auto& osp : cox.cones())
      if (osp.k() == n) ++chambers;
    rep.add("Coxeter fan has n! chambers", chambers == factorial);
    rep.add("Coxeter fan has 2(2^{n-1}-1) rays",
            static_cast<int>(cox.rays().size()) == 2 * ((1 << (n - 1)) - 1));

    const IntMat c2 = product_cone_matrix_d2(n);
    rep.add("product cone matrix has full rank", c2.rank() == n + 1);
    const IntMat pairing = base_map_row(n) * c2;
    bool mult_one = true;
    for (int j = 0; j < pairing.cols(); ++j)
      if (pairing.at(0, j) != 1) mult_one = false;
    rep.add("every generator pairs to one against the base form", mult_one);

    const auto bundle = verify_bundle_structure(n);
    for (const auto& item : bundle.items) rep.items.push_back(item);
  }
  return rep;
}

} // namespace stringy
