#pragma once

#include "stringy/intmat.hpp"
#include "stringy/partition.hpp"

#include <string>
#include <vector>

namespace stringy {

// Permutation of {1..r} stored 0-indexed: img[i] = p(i+1) - 1.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int r);
  static Permutation from_one_line(const std::vector<int>& one_based);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; } // 0-indexed
  Permutation inverse() const;
  bool is_identity() const;

  std::vector<int> one_line() const;          // 1-indexed images
  std::string to_string() const;              // "[2,1,3]"
  IntMat to_matrix() const;                   // column j = e_{p(j)}
  std::vector<int> cycle_type() const;        // decreasing

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator!=(const Permutation& o) const { return img != o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

// (q o p)(i) = q(p(i))
Permutation compose(const Permutation& q, const Permutation& p);

// All permutations of degree r in lexicographic one-line order.
std::vector<Permutation> all_permutations(int r);

// s_lambda = (1..l_1)(l_1+1..l_2)...(l_{r-1}+1..l_r)
Permutation standard_element(const Partition& lambda);

} // namespace stringy
