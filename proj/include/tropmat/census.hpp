#pragma once

#include <vector>

#include "tropmat/subdivision.hpp"

namespace tropmat {

/// Every mixed subdivision of nΔ^{d-1}: sets of pairwise comparable
/// full-dimensional cells whose volumes add up to n^{d-1}. Sorted.
std::vector<MixedSubdivision> census(int n, int d);

/// Full-dimensional (n,d)-types, i.e. connected type graph.
std::vector<NdType> full_dimensional_types(int n, int d);

}  // namespace tropmat
