#pragma once

#include <vector>

#include "tropmat/subdivision.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// Removes position i (1-based) from every type. Throws when n = 1.
Tom deletion(const Tom& m, int i);
/// Removes several positions at once.
Tom deletion(const Tom& m, const std::vector<int>& positions);

/// Types avoiding coordinate j, relabelled onto 1..d-1 in order. The
/// original labels are kept in coordinate_labels(). Throws when d = 1.
Tom contraction(const Tom& m, int j);

/// Types whose entries all avoid `coords`, labels unchanged.
std::vector<NdType> avoiding(const std::vector<NdType>& types, Mask coords);

/// Drops the given positions (1-based) from a type.
NdType drop_positions(const NdType& a, const std::vector<int>& positions);

/// (d,n)-type with i ∈ A^t_j iff j ∈ A_i. Throws on an unbounded type.
NdType transpose(const NdType& a);

/// Refinements of the transposed vertices of m; parameters (d,n).
Tom dual_tom(const Tom& m);

/// Subdivision of dΔ^{n-1} whose maximal cells are the vertices of the
/// dual of to_tom(s).
MixedSubdivision dual_subdivision(const MixedSubdivision& s);

}  // namespace tropmat
