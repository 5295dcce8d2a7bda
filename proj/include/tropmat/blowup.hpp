#pragma once

#include "tropmat/partition.hpp"
#include "tropmat/subdivision.hpp"

namespace tropmat {

/// S ∨_i S2: cells (C without position i, X) with C maximal in s and X
/// maximal in s2 restricted to the face C_i. Both inputs must be fine.
MixedSubdivision blow_up(const MixedSubdivision& s, int i, const MixedSubdivision& s2);

/// Blow-up of hyperplane i of an arbitrary subdivision along π. The new
/// hyperplane is a copy of hyperplane i shifted into the reversed-π
/// sector; cells are computed from the local picture at each maximal
/// cell and appended as position n+1.
MixedSubdivision blow_up_nonfine(const MixedSubdivision& s, int i, const Permutation& pi);

/// Moves the last two positions of a blow_up(s, i, S_π) result into the
/// layout of blow_up_nonfine: the first new entry at position i, the
/// second at the end.
MixedSubdivision blow_up_layout(const MixedSubdivision& blown, int i);

}  // namespace tropmat
