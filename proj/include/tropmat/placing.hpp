#pragma once

#include "tropmat/partition.hpp"
#include "tropmat/subdivision.hpp"

namespace tropmat {

/// The trivial subdivision {([n],...)} of nΔ^{d-1} for n = 1, or in
/// general the single cell ([d],...,[d]).
MixedSubdivision trivial_subdivision(int n, int d);

/// Extension to (n+1)Δ^{d-1} by placing the vertices (n+1, σ_1), ...,
/// (n+1, σ_d) in order.
MixedSubdivision n_placing(const MixedSubdivision& s, const Permutation& sigma);

/// Extension to nΔ^d by placing the vertices (τ_1, d+1), ..., (τ_n, d+1).
MixedSubdivision d_placing(const MixedSubdivision& s, const Permutation& tau);

/// Cells of s that avoid `coords`, keeping labels, and connected over
/// the remaining coordinates: the maximal cells of the contraction.
std::vector<NdType> contraction_vertices(const std::vector<NdType>& cells, Mask coords);

}  // namespace tropmat
