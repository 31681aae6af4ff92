#pragma once

#include <string>
#include <vector>

namespace stringy {

// Weakly decreasing positive parts. The empty partition is the unique
// partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;          // sum of parts
  int r() const { return static_cast<int>(parts.size()); }
  std::vector<int> prefix_sums() const;   // l_j = parts[0] + ... + parts[j]

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string to_string() const;          // "(2,1,1)"
};

// All partitions of n in reverse-lexicographic order, starting with (n)
// and ending with (1^n).
std::vector<Partition> partitions_of(int n);

} // namespace stringy
