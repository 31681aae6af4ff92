#include "stringy/coxeter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stringy {

int OrderedSetPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string OrderedSetPartition::to_string() const {
  std::string s = "(";
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (j) s += "|";
    for (size_t i = 0; i < blocks[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blocks[j][i] + 1);
    }
  }
  return s + ")";
}

std::vector<OrderedSetPartition> ordered_set_partitions(int r) {
  std::vector<OrderedSetPartition> out;
  // surjections {0..r-1} -> {0..k-1} are exactly the ordered set partitions
  for (int k = 1; k <= r; ++k) {
    std::vector<int> f(static_cast<size_t>(r), 0);
    while (true) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
      for (int i = 0; i < r; ++i) blocks[static_cast<size_t>(f[static_cast<size_t>(i)])].push_back(i);
      bool surjective = true;
      for (const auto& b : blocks)
        if (b.empty()) { surjective = false; break; }
      if (surjective) out.push_back(OrderedSetPartition{blocks});
      int i = r - 1;
      while (i >= 0 && f[static_cast<size_t>(i)] == k - 1) {
        f[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++f[static_cast<size_t>(i)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterFan::CoxeterFan(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("CoxeterFan: r must be positive");
  cones_ = ordered_set_partitions(r);
}

Vec CoxeterFan::weight_vector(const std::vector<int>& subset) const {
  Vec v(static_cast<size_t>(r_ - 1), Int(0));
  bool has_last = false;
  for (int x : subset) {
    if (x == r_ - 1)
      has_last = true;
    else
      v[static_cast<size_t>(x)] += 1;
  }
  if (has_last)
    for (auto& c : v) c -= 1;
  return v;
}

std::vector<Vec> CoxeterFan::rays() const {
  std::set<Vec> out;
  for (int mask = 1; mask < (1 << (r_ - 1)); ++mask) {
    Vec v(static_cast<size_t>(r_ - 1), Int(0));
    for (int i = 0; i < r_ - 1; ++i)
      if (mask & (1 << i)) v[static_cast<size_t>(i)] = 1;
    Vec neg = v;
    for (auto& c : neg) c = -c;
    out.insert(std::move(v));
    out.insert(std::move(neg));
  }
  return std::vector<Vec>(out.begin(), out.end());
}

std::vector<Vec> CoxeterFan::positive_rays() const {
  std::vector<Vec> out;
  for (int mask = 1; mask < (1 << (r_ - 1)); ++mask) {
    Vec v(static_cast<size_t>(r_ - 1), Int(0));
    for (int i = 0; i < r_ - 1; ++i)
      if (mask & (1 << i)) v[static_cast<size_t>(i)] = 1;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> CoxeterFan::generators(const OrderedSetPartition& osp) const {
  std::vector<Vec> gens;
  std::vector<int> prefix;
  for (int j = 0; j + 1 < osp.k(); ++j) {
    prefix.insert(prefix.end(), osp.blocks[static_cast<size_t>(j)].begin(),
                  osp.blocks[static_cast<size_t>(j)].end());
    gens.push_back(weight_vector(prefix));
  }
  return gens;
}

Cone CoxeterFan::cone_of(const OrderedSetPartition& osp) const {
  return Cone(r_ - 1, generators(osp));
}

OrderedSetPartition CoxeterFan::chamber(const Permutation& w) const {
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < r_; ++j) blocks.push_back({w(j)});
  return OrderedSetPartition{blocks};
}

IntMat CoxeterFan::action_matrix(const Permutation& w) const {
  IntMat m(r_ - 1, r_ - 1);
  for (int i = 0; i < r_ - 1; ++i) {
    const int target = w(i);
    if (target == r_ - 1) {
      for (int row = 0; row < r_ - 1; ++row) m.at(row, i) = -1;
    } else {
      m.at(target, i) = 1;
    }
  }
  return m;
}

bool CoxeterFan::stabilizes(const Permutation& w, const OrderedSetPartition& osp) const {
  for (const auto& block : osp.blocks) {
    std::vector<int> image;
    image.reserve(block.size());
    for (int x : block) image.push_back(w(x));
    std::sort(image.begin(), image.end());
    if (image != block) return false;
  }
  return true;
}

Fan CoxeterFan::to_fan() const {
  Fan fan;
  fan.ambient = r_ - 1;
  for (const auto& w : all_permutations(r_)) fan.maximal.push_back(cone_of(chamber(w)));
  return fan;
}

LPoly toric_e(const CoxeterFan& fan) {
  LPoly total;
  const LPoly l_minus_1 = LPoly::var() - LPoly::one();
  for (const auto& osp : fan.cones())
    total += l_minus_1.pow(static_cast<unsigned>(fan.ambient() - osp.cone_dim()));
  return total;
}

LPoly toric_e(const Fan& fan) {
  std::set<std::vector<Vec>> faces;
  for (const auto& c : fan.maximal) {
    if (static_cast<int>(c.rays().size()) != c.dim())
      throw std::invalid_argument("toric_e: fan must be simplicial");
    const auto& rs = c.rays();
    const size_t n = rs.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      std::vector<Vec> sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(rs[i]);
      faces.insert(std::move(sub));
    }
  }
  LPoly total;
  const LPoly l_minus_1 = LPoly::var() - LPoly::one();
  for (const auto& f : faces)
    total += l_minus_1.pow(static_cast<unsigned>(fan.ambient - static_cast<int>(f.size())));
  return total;
}

} // namespace stringy
