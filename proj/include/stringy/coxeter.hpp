#pragma once

#include "stringy/fan.hpp"
#include "stringy/lpoly.hpp"
#include "stringy/permutation.hpp"

#include <string>
#include <vector>

namespace stringy {

// Ordered set partition of {1..r} (0-indexed elements): the faces of the
// Coxeter fan of A_{r-1}. A partition with k blocks corresponds to a cone
// of dimension k-1; one block gives the zero cone, all-singleton
// partitions give the Weyl chambers.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;   // each block sorted

  int ground_size() const;
  int k() const { return static_cast<int>(blocks.size()); }
  int cone_dim() const { return k() - 1; }
  bool operator==(const OrderedSetPartition& o) const { return blocks == o.blocks; }
  bool operator<(const OrderedSetPartition& o) const { return blocks < o.blocks; }
  std::string to_string() const;          // "(1|2,3)"
};

std::vector<OrderedSetPartition> ordered_set_partitions(int r);

// Coxeter fan of the A_{r-1} root system on Z^{r-1}: rays are the nonzero
// 0/1 vectors and their negations, and the symmetric group acts through
// the weight-vector realization.
class CoxeterFan {
 public:
  explicit CoxeterFan(int r);

  int r() const { return r_; }
  int ambient() const { return r_ - 1; }

  const std::vector<OrderedSetPartition>& cones() const { return cones_; }

  std::vector<Vec> rays() const;                  // sorted
  std::vector<Vec> positive_rays() const;         // nonzero 0/1 vectors

  // image in Z^{r-1} of the indicator vector of a subset of {1..r}
  Vec weight_vector(const std::vector<int>& subset) const;

  // generators of the cone of an ordered set partition: the weight vectors
  // of its proper prefix unions
  std::vector<Vec> generators(const OrderedSetPartition& osp) const;
  Cone cone_of(const OrderedSetPartition& osp) const;

  OrderedSetPartition chamber(const Permutation& w) const;

  // lattice matrix of w acting on Z^{r-1}
  IntMat action_matrix(const Permutation& w) const;

  // w fixes each block of the partition setwise
  bool stabilizes(const Permutation& w, const OrderedSetPartition& osp) const;

  Fan to_fan() const;                             // maximal cones = chambers

 private:
  int r_;
  std::vector<OrderedSetPartition> cones_;
};

// Sum of (L-1)^{dim of orbit} over all cones.
LPoly toric_e(const CoxeterFan& fan);
LPoly toric_e(const Fan& fan);   // requires simplicial maximal cones

} // namespace stringy
