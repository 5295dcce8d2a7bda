#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/mij.hpp"
#include "tropmat/partition.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// Word over '+', '-', '0', one letter per chosen position.
using SignVector = std::string;

/// '+' if c ⊆ i, '-' if c avoids i, '0' otherwise.
char sector_sign(Mask c, Mask i);

/// {(T_{I_p}(C_p))_{p ∈ positions} : C ∈ m}, sorted. I has one proper
/// nonempty subset per position of m; positions are 1-based.
std::vector<SignVector> halfspace_covectors(const Tom& m, const std::vector<int>& positions,
                                            const HalfspaceSystem& i);

/// False iff the zero vector occurs but not all 3^length vectors do.
bool covectors_complete(const std::vector<SignVector>& covectors, std::size_t length);

/// ∪_{x ∈ I} {J : x ∈ J ⊆ {x} ∪ {labels before x in π}}, sorted.
std::vector<Mask> approximated_types(Mask i, const Permutation& pi);

struct SeparatingHalfspace {
  Mask l = 0;
  Permutation pi;
  /// 1..3 for the case recipe that produced it, 0 for exhaustive search.
  int recipe = 0;
};

/// (L, π) whose approximated types contain I, J and I ∪ J but not K.
/// Throws std::invalid_argument unless I, J are nonempty proper subsets
/// of [d] and K ∉ {I, J, I ∪ J}. Nullopt when no pair exists.
std::optional<SeparatingHalfspace> separating_halfspace(int d, Mask i, Mask j, Mask k);

/// The case recipe alone, before verification.
SeparatingHalfspace separating_recipe(int d, Mask i, Mask j, Mask k);

/// I, J, I ∪ J ∈ approximated_types(L, π) and K ∉.
bool separates(const SeparatingHalfspace& h, Mask i, Mask j, Mask k);

}  // namespace tropmat
