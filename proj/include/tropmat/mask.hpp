#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tropmat {

/// Subset of the label set {1..16}; bit (j-1) stands for label j.
using Mask = std::uint16_t;

inline constexpr int kMaxLabels = 16;

constexpr Mask bit(int label) { return static_cast<Mask>(1u << (label - 1)); }

constexpr Mask full_mask(int count) {
  return static_cast<Mask>((1u << count) - 1u);
}

constexpr bool contains(Mask set, int label) { return (set & bit(label)) != 0; }

constexpr bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }

inline int popcount(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

/// Smallest label in a nonempty set.
inline int lowest(Mask m) { return std::countr_zero(static_cast<unsigned>(m)) + 1; }

/// Labels in ascending order.
std::vector<int> labels(Mask m);

Mask mask_of(const std::vector<int>& labels);

/// "123" when every label is a single digit, otherwise "{1,10}".
std::string mask_to_string(Mask m);

/// Accepts "123" (digit labels) or "{1,10}"; throws std::invalid_argument.
Mask parse_mask(const std::string& text);

/// Every nonempty subset of `universe`, in increasing numeric order.
std::vector<Mask> nonempty_subsets(Mask universe);

}  // namespace tropmat
