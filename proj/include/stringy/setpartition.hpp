#pragma once

#include "stringy/permutation.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace stringy {

// Partition of {1..r} into disjoint non-empty blocks, 0-indexed internally.
// Blocks are kept sorted and ordered by their smallest element, so equal
// partitions compare equal.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> bs);

  int ground_size() const;
  std::vector<int> sizes() const;         // m = (|B_1|,...,|B_k|)
  int block_index_of(int elem) const;

  // Common refinement; its Young subgroup is the intersection of the two
  // Young subgroups.
  SetPartition refine_with(const SetPartition& o) const;

  bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
  bool operator!=(const SetPartition& o) const { return blocks != o.blocks; }

  std::string to_string() const;          // "{1},{2,3}" (1-indexed)

  // Every permutation of the Young subgroup fixing each block setwise.
  std::vector<Permutation> young_subgroup() const;
};

// Level sets of a value sequence, blocks ordered by smallest element.
template <typename T>
SetPartition multiplicity_partition(const std::vector<T>& values) {
  std::map<int, std::vector<int>> by_first;
  std::map<T, int> first_of;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    auto it = first_of.find(values[static_cast<size_t>(i)]);
    if (it == first_of.end()) {
      first_of.emplace(values[static_cast<size_t>(i)], i);
      by_first[i].push_back(i);
    } else {
      by_first[it->second].push_back(i);
    }
  }
  std::vector<std::vector<int>> bs;
  for (auto& [first, blk] : by_first) bs.push_back(std::move(blk));
  return SetPartition(std::move(bs));
}

} // namespace stringy
