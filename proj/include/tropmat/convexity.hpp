#pragma once

#include <optional>
#include <vector>

#include "tropmat/subdivision.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// {C ∈ types : C_i ∈ {A_i, B_i, A_i ∪ B_i} for all i}. Throws unless A
/// and B are members.
std::vector<NdType> convex_hull(const std::vector<NdType>& types, const NdType& a, const NdType& b);

/// Positions i (1-based) where neither of A_i, B_i contains the other.
std::vector<int> dist(const NdType& a, const NdType& b);

/// Connectivity of `cells` where C and D are adjacent when some E of
/// `universe` has both as faces (their closed duals meet).
bool is_connected_subcomplex(const std::vector<NdType>& universe, const std::vector<NdType>& cells);
bool is_connected_subcomplex(const MixedSubdivision& s, const std::vector<NdType>& cells);

/// Walks a face-adjacency path from A to B inside the convex hull and
/// returns its first cell with C_j = A_j ∪ B_j (nullopt if the path has
/// none). Throws std::runtime_error when the hull is disconnected.
std::optional<NdType> eliminate_via_connectivity(const std::vector<NdType>& types, const NdType& a,
                                                 const NdType& b, int j);

/// Recursive elimination chain from the connectivity argument: each
/// elimination C at a position of dist(A,B) must shrink both dist(A,C)
/// and dist(B,C). False if an elimination is missing or does not shrink.
bool elimination_chain_holds(const Tom& m, const NdType& a, const NdType& b);

/// {C ∈ types : C ⊆ T entrywise}. Throws unless T is a member.
std::vector<NdType> star(const std::vector<NdType>& types, const NdType& t);

}  // namespace tropmat
