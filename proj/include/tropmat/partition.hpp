#pragma once

#include <vector>

#include "tropmat/mask.hpp"
#include "tropmat/nd_type.hpp"

namespace tropmat {

/// Ordered partition (P_1,...,P_k) of a label set: disjoint nonempty
/// blocks in order.
struct OrderedPartition {
  std::vector<Mask> blocks;

  /// Blocks disjoint, nonempty, union equal to full_mask(count).
  bool is_partition_of(int count) const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// A permutation of {1..k}, stored as its one-line notation.
using Permutation = std::vector<int>;

bool is_permutation_of(const Permutation& p, int count);

/// All permutations of {1..count} in lexicographic order.
std::vector<Permutation> all_permutations(int count);

Permutation reversed(const Permutation& p);

/// Partition into singletons following the order of p.
OrderedPartition as_partition(const Permutation& p);

/// Upper bound on the label count for exhaustive ordered-partition
/// enumeration (faces, dual). Defaults to 6; set_partition_limit(0) restores it.
int partition_limit();
void set_partition_limit(int limit);

/// Every ordered partition of {1..count} (ordered Bell many). Cached per
/// count; throws std::length_error above partition_limit().
const std::vector<OrderedPartition>& ordered_partitions(int count);

/// Ordered partitions of an arbitrary label set, uncached.
std::vector<OrderedPartition> ordered_partitions_of(Mask set);

/// Unordered set partitions of `set`, each as blocks sorted ascending.
std::vector<std::vector<Mask>> set_partitions(Mask set);

/// B_i = A_i ∩ P_{m(i)} with m(i) the first block meeting A_i.
NdType refine(const NdType& a, const OrderedPartition& p);

/// { refine(A,P) : P ordered partition of [d] }, sorted and deduplicated.
std::vector<NdType> faces(const NdType& a);

/// B ∈ faces(A), decided without enumerating partitions.
bool is_face(const NdType& b, const NdType& a);

/// Faces of every type in `cells`, sorted and deduplicated.
std::vector<NdType> face_closure(const std::vector<NdType>& cells);

}  // namespace tropmat
