#include "stringy/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stringy {

Vec primitive(Vec v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

namespace {

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// rational row reduction returning the indices of a row basis
std::vector<int> independent_rows(const std::vector<Vec>& rows, int ambient) {
  std::vector<std::vector<Rat>> basis;
  std::vector<int> picked;
  for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
    std::vector<Rat> v(rows[static_cast<size_t>(idx)].begin(), rows[static_cast<size_t>(idx)].end());
    for (const auto& b : basis) {
      // eliminate with the pivot of b
      int piv = -1;
      for (int j = 0; j < ambient; ++j)
        if (b[static_cast<size_t>(j)] != 0) { piv = j; break; }
      if (piv < 0) continue;
      if (v[static_cast<size_t>(piv)] == 0) continue;
      const Rat f = v[static_cast<size_t>(piv)] / b[static_cast<size_t>(piv)];
      for (int j = 0; j < ambient; ++j) v[static_cast<size_t>(j)] -= f * b[static_cast<size_t>(j)];
    }
    bool zero = true;
    for (int j = 0; j < ambient; ++j)
      if (v[static_cast<size_t>(j)] != 0) { zero = false; break; }
    if (!zero) {
      basis.push_back(std::move(v));
      picked.push_back(idx);
    }
  }
  return picked;
}

std::vector<Vec> matrix_cols(const IntMat& m) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

} // namespace

std::vector<Vec> dd_extreme_rays(const std::vector<Vec>& ineqs_in,
                                 const std::vector<Vec>& eqs, int ambient) {
  // pass to coordinates on the equation kernel
  IntMat K = IntMat::identity(ambient);
  if (!eqs.empty()) {
    IntMat E(static_cast<int>(eqs.size()), ambient);
    for (size_t i = 0; i < eqs.size(); ++i)
      for (int j = 0; j < ambient; ++j) E.at(static_cast<int>(i), j) = eqs[i][static_cast<size_t>(j)];
    K = kernel(E);
  }
  const int d = K.cols();
  if (d == 0) return {};

  std::vector<Vec> ineqs;
  for (const auto& a : ineqs_in) {
    Vec t(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) t[static_cast<size_t>(j)] = dot(a, K.col(j));
    if (!is_zero_vec(t)) ineqs.push_back(std::move(t));
  }

  const std::vector<int> init = independent_rows(ineqs, d);
  if (static_cast<int>(init.size()) < d)
    throw std::invalid_argument("dd_extreme_rays: cone contains a line");

  // initial simplicial cone from d independent constraints: columns of the
  // inverse of the chosen constraint matrix
  IntMat B(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) B.at(i, j) = ineqs[static_cast<size_t>(init[static_cast<size_t>(i)])][static_cast<size_t>(j)];
  std::vector<Vec> rays;
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> e(static_cast<size_t>(d), Rat(0));
    e[static_cast<size_t>(j)] = 1;
    auto x = solve_rational(B, e);
    Int lcm = 1;
    for (const auto& q : *x) lcm = lcm / gcd_int(lcm, den(q)) * den(q);
    Vec r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = num((*x)[static_cast<size_t>(i)] * Rat(lcm));
    rays.push_back(primitive(std::move(r)));
  }

  // incremental double description over the remaining constraints
  std::vector<size_t> order;
  for (size_t i = 0; i < ineqs.size(); ++i)
    if (std::find(init.begin(), init.end(), static_cast<int>(i)) == init.end()) order.push_back(i);
  std::vector<size_t> processed(init.begin(), init.end());

  auto tight_set = [&](const Vec& r) {
    std::vector<char> t(processed.size());
    for (size_t k = 0; k < processed.size(); ++k)
      t[k] = (dot(ineqs[processed[k]], r) == 0) ? 1 : 0;
    return t;
  };

  for (size_t ci : order) {
    const Vec& a = ineqs[ci];
    std::vector<Vec> pos, zero, neg;
    for (auto& r : rays) {
      const Int v = dot(a, r);
      if (v > 0)
        pos.push_back(r);
      else if (v == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(ci);
      continue;
    }
    std::vector<Vec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    // adjacency via the standard tight-set subset test
    std::vector<std::vector<char>> tights;
    tights.reserve(rays.size());
    for (const auto& r : rays) tights.push_back(tight_set(r));
    auto tight_of = [&](const Vec& r) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == r) return tights[i];
      throw std::logic_error("dd: ray lookup failed");
    };
    for (const auto& p : pos)
      for (const auto& n : neg) {
        const auto tp = tight_of(p);
        const auto tn = tight_of(n);
        std::vector<char> common(tp.size());
        for (size_t k = 0; k < tp.size(); ++k) common[k] = tp[k] & tn[k];
        bool adjacent = true;
        for (const auto& r : rays) {
          if (r == p || r == n) continue;
          const auto tr = tight_of(r);
          bool contains = true;
          for (size_t k = 0; k < common.size(); ++k)
            if (common[k] && !tr[k]) { contains = false; break; }
          if (contains) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Vec comb(static_cast<size_t>(d));
        const Int cp = dot(a, p), cn = dot(a, n);
        for (int j = 0; j < d; ++j)
          comb[static_cast<size_t>(j)] = cp * n[static_cast<size_t>(j)] - cn * p[static_cast<size_t>(j)];
        next.push_back(primitive(std::move(comb)));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(ci);
  }

  // back to ambient coordinates
  std::set<Vec> out;
  for (const auto& r : rays) {
    Vec v(static_cast<size_t>(ambient), Int(0));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < ambient; ++i) v[static_cast<size_t>(i)] += K.at(i, j) * r[static_cast<size_t>(j)];
    out.insert(primitive(std::move(v)));
  }
  return std::vector<Vec>(out.begin(), out.end());
}

Cone::Cone(int ambient, std::vector<Vec> generators) : ambient_(ambient) {
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient)
      throw std::invalid_argument("Cone: generator dimension mismatch");
    g = primitive(std::move(g));
  }
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const Vec& v) { return is_zero_vec(v); }),
                   generators.end());
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  if (generators.empty()) {
    for (int i = 0; i < ambient; ++i) {
      Vec e(static_cast<size_t>(ambient), Int(0));
      e[static_cast<size_t>(i)] = 1;
      span_eqs_.push_back(std::move(e));
    }
    return;
  }

  // span of the generators and its equations
  IntMat G = IntMat::from_cols(generators);
  const IntMat ortho = kernel(G.transpose());
  for (int j = 0; j < ortho.cols(); ++j) span_eqs_.push_back(ortho.col(j));
  dim_ = ambient - ortho.cols();

  // facet normals: extreme rays of the dual cone restricted to the span,
  // which kills the dual's lineality span^perp
  facets_ = dd_extreme_rays(generators, span_eqs_, ambient);

  rays_ = dd_extreme_rays(facets_, span_eqs_, ambient);
  std::sort(rays_.begin(), rays_.end());
}

bool Cone::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Cone::contains: dimension mismatch");
  for (const auto& e : span_eqs_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::has_ray(const Vec& v) const {
  const Vec p = primitive(v);
  return std::binary_search(rays_.begin(), rays_.end(), p);
}

Cone Cone::face_through(const std::vector<Vec>& rays_subset) const {
  std::vector<Vec> tight_facets;
  for (const auto& f : facets_) {
    bool tight = true;
    for (const auto& r : rays_subset)
      if (dot(f, r) != 0) { tight = false; break; }
    if (tight) tight_facets.push_back(f);
  }
  std::vector<Vec> face_rays;
  for (const auto& r : rays_) {
    bool on = true;
    for (const auto& f : tight_facets)
      if (dot(f, r) != 0) { on = false; break; }
    if (on) face_rays.push_back(r);
  }
  return Cone(ambient_, face_rays);
}

bool Cone::is_face(const Cone& f) const {
  for (const auto& r : f.rays())
    if (!contains(r)) return false;
  return face_through(f.rays()) == f;
}

Cone Cone::intersect(const Cone& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  std::vector<Vec> ineqs = facets_;
  ineqs.insert(ineqs.end(), o.facets_.begin(), o.facets_.end());
  std::vector<Vec> eqs = span_eqs_;
  eqs.insert(eqs.end(), o.span_eqs_.begin(), o.span_eqs_.end());
  return Cone(ambient_, dd_extreme_rays(ineqs, eqs, ambient_));
}

bool Cone::is_unimodular() const {
  if (static_cast<int>(rays_.size()) != dim_ || dim_ != ambient_) return false;
  IntMat m = IntMat::from_cols(rays_);
  const Int d = m.det();
  return d == 1 || d == -1;
}

std::string Cone::to_string() const {
  std::string s = "cone{";
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (size_t j = 0; j < rays_[i].size(); ++j) {
      if (j) s += ",";
      s += rays_[i][j].str();
    }
    s += ")";
  }
  return s + "}";
}

Cone cone_from_matrix_columns(const IntMat& m) {
  return Cone(m.rows(), matrix_cols(m));
}

namespace {

bool surjective(const IntMat& h) {
  if (h.rows() == 0) return true;
  HnfResult r = hnf(h.transpose());
  if (r.rank != h.rows()) return false;
  for (int i = 0; i < h.rows(); ++i)
    if (r.H.at(i, i) != 1) return false;
  return true;
}

Cone image_cone(const IntMat& h, const Cone& c) {
  std::vector<Vec> img;
  for (const auto& r : c.rays()) img.push_back(h.apply(r));
  return Cone(h.rows(), img);
}

} // namespace

FiberProductCone fiber_product_cones(const Cone& sigma1, const IntMat& h1,
                                     const Cone& sigma2, const IntMat& h2) {
  if (h1.cols() != sigma1.ambient() || h2.cols() != sigma2.ambient() ||
      h1.rows() != h2.rows())
    throw std::invalid_argument("fiber_product_cones: shape mismatch");
  if (!surjective(h1) || !surjective(h2))
    throw std::invalid_argument("fiber_product_cones: projection not surjective");
  if (image_cone(h1, sigma1) != image_cone(h2, sigma2))
    throw std::invalid_argument("fiber_product_cones: images of the cones differ");

  const int m1 = sigma1.ambient(), m2 = sigma2.ambient();
  const int ambient = m1 + m2;
  auto pad = [ambient](const Vec& v, int offset) {
    Vec w(static_cast<size_t>(ambient), Int(0));
    for (size_t i = 0; i < v.size(); ++i) w[static_cast<size_t>(offset) + i] = v[i];
    return w;
  };
  std::vector<Vec> ineqs, eqs;
  for (const auto& f : sigma1.facets()) ineqs.push_back(pad(f, 0));
  for (const auto& f : sigma2.facets()) ineqs.push_back(pad(f, m1));
  for (const auto& e : sigma1.span_equations()) eqs.push_back(pad(e, 0));
  for (const auto& e : sigma2.span_equations()) eqs.push_back(pad(e, m1));
  for (int i = 0; i < h1.rows(); ++i) {
    Vec e(static_cast<size_t>(ambient), Int(0));
    for (int j = 0; j < m1; ++j) e[static_cast<size_t>(j)] = h1.at(i, j);
    for (int j = 0; j < m2; ++j) e[static_cast<size_t>(m1 + j)] = -h2.at(i, j);
    eqs.push_back(std::move(e));
  }
  const std::vector<Vec> flat_rays = dd_extreme_rays(ineqs, eqs, ambient);

  // lattice of the product: kernel of (h1 | -h2)
  IntMat glue(h1.rows(), ambient);
  for (int i = 0; i < h1.rows(); ++i) {
    for (int j = 0; j < m1; ++j) glue.at(i, j) = h1.at(i, j);
    for (int j = 0; j < m2; ++j) glue.at(i, m1 + j) = -h2.at(i, j);
  }
  const IntMat K = kernel(glue);

  std::vector<Vec> coords;
  for (const auto& r : flat_rays) {
    auto x = solve_integral(K, r);
    if (!x) throw std::logic_error("fiber_product_cones: ray outside product lattice");
    coords.push_back(*x);
  }
  FiberProductCone out;
  out.cone = Cone(K.cols(), coords);
  out.embedding = K;
  return out;
}

} // namespace stringy
