#include "stringy/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stringy {

std::vector<Vec> Fan::rays() const {
  std::set<Vec> out;
  for (const auto& c : maximal)
    for (const auto& r : c.rays()) out.insert(r);
  return std::vector<Vec>(out.begin(), out.end());
}

bool Fan::supports(const Vec& v) const {
  for (const auto& c : maximal)
    if (c.contains(v)) return true;
  return false;
}

std::string Fan::to_json() const {
  const std::vector<Vec> rs = rays();
  auto ray_index = [&rs](const Vec& v) {
    return static_cast<int>(std::lower_bound(rs.begin(), rs.end(), v) - rs.begin());
  };
  std::ostringstream os;
  os << "{\"ambient_rank\":" << ambient << ",\"rays\":[";
  for (size_t i = 0; i < rs.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < rs[i].size(); ++j) {
      if (j) os << ",";
      os << rs[i][j].str();
    }
    os << "]";
  }
  os << "],\"maximal_cones\":[";
  std::vector<std::vector<int>> idx;
  for (const auto& c : maximal) {
    std::vector<int> ids;
    for (const auto& r : c.rays()) ids.push_back(ray_index(r));
    std::sort(ids.begin(), ids.end());
    idx.push_back(std::move(ids));
  }
  std::sort(idx.begin(), idx.end());
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < idx[i].size(); ++j) {
      if (j) os << ",";
      os << idx[i][j];
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

bool Fan::intersections_are_faces() const {
  for (size_t i = 0; i < maximal.size(); ++i)
    for (size_t j = i + 1; j < maximal.size(); ++j) {
      const Cone meet = maximal[i].intersect(maximal[j]);
      if (!maximal[i].is_face(meet) || !maximal[j].is_face(meet)) return false;
    }
  return true;
}

Fan star_subdivide(const Fan& fan, const Vec& ray) {
  const Vec v = primitive(ray);
  if (!fan.supports(v))
    throw std::invalid_argument("star_subdivide: ray outside the fan support");
  std::set<Cone> next;
  for (const auto& c : fan.maximal) {
    if (!c.contains(v)) {
      next.insert(c);
      continue;
    }
    // maximal v-free faces are exactly the facets missing v
    for (const auto& f : c.facets()) {
      Int pairing = 0;
      for (size_t k = 0; k < f.size(); ++k) pairing += f[k] * v[k];
      if (pairing == 0) continue; // v lies on this facet
      std::vector<Vec> gens;
      for (const auto& r : c.rays()) {
        Int t = 0;
        for (size_t k = 0; k < f.size(); ++k) t += f[k] * r[k];
        if (t == 0) gens.push_back(r);
      }
      gens.push_back(v);
      next.insert(Cone(fan.ambient, gens));
    }
  }
  Fan out;
  out.ambient = fan.ambient;
  out.maximal.assign(next.begin(), next.end());
  return out;
}

} // namespace stringy
