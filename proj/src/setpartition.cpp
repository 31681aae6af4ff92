#include "stringy/setpartition.hpp"

#include <numeric>
#include <stdexcept>

namespace stringy {

SetPartition::SetPartition(std::vector<std::vector<int>> bs) : blocks(std::move(bs)) {
  int total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    total += static_cast<int>(b.size());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<char> seen(static_cast<size_t>(total), 0);
  for (const auto& b : blocks)
    for (int x : b) {
      if (x < 0 || x >= total || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("SetPartition: blocks do not partition the ground set");
      seen[static_cast<size_t>(x)] = 1;
    }
}

int SetPartition::ground_size() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

std::vector<int> SetPartition::sizes() const {
  std::vector<int> m;
  m.reserve(blocks.size());
  for (const auto& b : blocks) m.push_back(static_cast<int>(b.size()));
  return m;
}

int SetPartition::block_index_of(int elem) const {
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j)
    for (int x : blocks[static_cast<size_t>(j)])
      if (x == elem) return j;
  throw std::invalid_argument("SetPartition: element outside ground set");
}

SetPartition SetPartition::refine_with(const SetPartition& o) const {
  if (ground_size() != o.ground_size())
    throw std::invalid_argument("refine_with: ground sets differ");
  const int n = ground_size();
  std::vector<int> key_a(static_cast<size_t>(n)), key_b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    key_a[static_cast<size_t>(i)] = block_index_of(i);
    key_b[static_cast<size_t>(i)] = o.block_index_of(i);
  }
  std::vector<std::pair<int, int>> keys(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) keys[static_cast<size_t>(i)] = {key_a[static_cast<size_t>(i)], key_b[static_cast<size_t>(i)]};
  return multiplicity_partition(keys);
}

std::string SetPartition::to_string() const {
  std::string s;
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (j) s += ",";
    s += "{";
    for (size_t i = 0; i < blocks[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blocks[j][i] + 1);
    }
    s += "}";
  }
  return s;
}

std::vector<Permutation> SetPartition::young_subgroup() const {
  const int n = ground_size();
  std::vector<Permutation> out;
  std::vector<int> cur(static_cast<size_t>(n));
  std::iota(cur.begin(), cur.end(), 0);
  out.push_back(Permutation(cur));
  for (const auto& block : blocks) {
    std::vector<Permutation> next;
    std::vector<int> arr = block;
    std::sort(arr.begin(), arr.end());
    do {
      for (const auto& base : out) {
        std::vector<int> v = base.img;
        for (size_t i = 0; i < block.size(); ++i) v[static_cast<size_t>(block[i])] = arr[i];
        next.push_back(Permutation(std::move(v)));
      }
    } while (std::next_permutation(arr.begin(), arr.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace stringy
