#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/tom.hpp"

namespace tropmat {

/// One subset I_i per position. Proper nonempty subsets of [d] for
/// halfspace systems; [d] itself is allowed as an argument of m_of.
using HalfspaceSystem = std::vector<Mask>;

/// One unordered partition of [d] per position, blocks in the given order.
using PartitionTuple = std::vector<std::vector<Mask>>;

/// {A ∈ types : A_i ⊆ I_i and A_i meets every block of J_i}.
std::vector<NdType> m_of(const std::vector<NdType>& types, const HalfspaceSystem& i, const PartitionTuple& j);
std::vector<NdType> m_of(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j);

/// Members of highest dimension: those that are a face of no other member.
std::vector<NdType> maximal_members(const std::vector<NdType>& cells);

/// {T ∈ universe : some C of cells has T in its closure, i.e. is_face(C,T)}.
std::vector<NdType> closure(const std::vector<NdType>& universe, const std::vector<NdType>& cells);

/// d + n - 1 - (total number of blocks in J).
int expected_dimension(int n, int d, const PartitionTuple& j);

struct MijReport {
  std::vector<NdType> members;
  std::vector<NdType> maximal;
  int expected_dimension = 0;
  bool pure = true;       // every maximal member has the expected dimension
  bool extends = true;    // every member lies in the closure of a maximal one
  bool connected = true;
  bool ok() const { return !members.empty() && pure && extends && connected; }
};

MijReport mij_report(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j);

/// Split data of an internal node. Positions k and block ℓ are 1-based.
struct MijSplit {
  int k = 0;
  int l = 0;
  int a = 0;
  int b = 0;
  Mask i1 = 0;
  Mask i2 = 0;
  PartitionTuple j0;
};

/// Split of M(I,J) separating maximal members A and B: k is the first
/// position where they differ, ℓ the first block of J_k they meet
/// differently, a ∈ A_k ∩ J_kℓ and b ∈ B_k ∩ J_kℓ with a ∉ B_k where
/// possible. J_kℓ becomes {a} and J_kℓ \ {a}; I_1 = I_k \ {a} and
/// I_2 = I_k \ (J_kℓ \ {a}). Nullopt when A and B meet every block alike.
std::optional<MijSplit> constructible_split(const HalfspaceSystem& i, const PartitionTuple& j, const NdType& a,
                                            const NdType& b);

struct ConstructibilityNode {
  HalfspaceSystem i;
  PartitionTuple j;
  std::vector<NdType> maximal;
  int dimension = 0;
  std::optional<MijSplit> split;
  /// Empty for leaves; otherwise the I_1 piece, the I_2 piece and their
  /// intersection M(I,J_0).
  std::vector<ConstructibilityNode> children;
};

struct ConstructibilityResult {
  bool ok = false;
  std::string failure;
  ConstructibilityNode root;
};

/// Recursively splits M(I,J) and checks every node: both pieces connected
/// and pure of the parent dimension, their closures covering the parent's
/// closure and meeting in the closure of M(I,J_0), which is connected and
/// pure one dimension lower. Throws std::invalid_argument unless m is in
/// general position and M(I,J) is nonempty.
ConstructibilityResult constructibility_witness(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j);

/// Number of nodes in the tree.
std::size_t node_count(const ConstructibilityNode& node);

void validate_halfspace_system(const HalfspaceSystem& i, int n, int d, bool allow_full);
void validate_partition_tuple(const PartitionTuple& j, int n, int d);

}  // namespace tropmat
