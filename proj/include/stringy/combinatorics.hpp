#pragma once

#include "stringy/numeric.hpp"
#include "stringy/partition.hpp"
#include "stringy/permutation.hpp"
#include "stringy/setpartition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stringy {

// Angle vector (theta_1,...,theta_r) with theta_j = a_j / lambda_j,
// 0 <= theta_j < 1. Always exact rationals.
struct AngleType {
  std::vector<Rat> theta;

  int r() const { return static_cast<int>(theta.size()); }
  bool is_zero() const;
  std::string to_string() const;   // "(1/2,0,0)"
  bool operator==(const AngleType& o) const { return theta == o.theta; }
  bool operator<(const AngleType& o) const { return theta < o.theta; }
};

// All angle types for lambda, in lexicographic order.
std::vector<AngleType> angle_types(const Partition& lambda);

// Standard angle types: weakly increasing within each block of equal parts
// of lambda. Each multiplicity-group orbit on angle types contains exactly
// one standard element.
bool is_standard(const Partition& lambda, const AngleType& theta);
std::vector<AngleType> standard_angle_types(const Partition& lambda);

// adj(phi)(1) = 1, incrementing exactly where consecutive values differ.
template <typename T>
std::vector<int> adjacency(const std::vector<T>& values) {
  std::vector<int> a(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    a[i] = (i == 0) ? 1 : a[i - 1] + (values[i] == values[i - 1] ? 0 : 1);
  return a;
}

// The run label adj(theta o p) o p^{-1}: position i gets the index of the
// run of theta o p that p^{-1}(i) falls in.
std::vector<int> component_label(const AngleType& theta, const Permutation& p);

// Right coset S_{M(theta * p)} p together with the partition defining its
// Young subgroup.
struct CosetClass {
  std::vector<Permutation> members;    // sorted lexicographically
  Permutation representative;          // lexicographically least member
  SetPartition stabilizer_partition;   // M(theta * p)
};

// Partition of the full symmetric group into coset classes, ordered by
// representative.
std::vector<CosetClass> coset_partition(const AngleType& theta);

// One class per orbit of coset_partition(theta) under left multiplication
// by the Young subgroup of the common refinement of M(lambda) and
// M(theta); representative chosen lexicographically least in its orbit.
std::vector<CosetClass> reduced_representatives(const Partition& lambda,
                                                const AngleType& theta);

// Same orbits, but the retained class and the representative inside it are
// chosen by the callback (orbit members are passed sorted). Used to check
// that downstream totals do not depend on representative choices.
std::vector<CosetClass> reduced_representatives_with_picker(
    const Partition& lambda, const AngleType& theta,
    const std::function<size_t(size_t)>& pick_index);

// For each block B_j of M(theta * p): r_j = |B_j| and mu_j = sizes of the
// blocks of the common refinement of M(lambda) and M(theta * p) lying in
// B_j, sorted decreasingly.
std::vector<std::pair<int, Partition>> component_partition_types(
    const Partition& lambda, const AngleType& theta, const Permutation& p);

SetPartition lambda_multiplicity_partition(const Partition& lambda);
SetPartition theta_multiplicity_partition(const AngleType& theta);

} // namespace stringy
