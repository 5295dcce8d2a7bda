#pragma once

#include <random>
#include <string>
#include <vector>

#include "tropmat/mask.hpp"
#include "tropmat/nd_type.hpp"
#include "tropmat/subdivision.hpp"
#include "tropmat/tom.hpp"

namespace testing {

inline tropmat::NdType T(const std::string& text, int d) { return tropmat::NdType::parse(text, d); }

inline std::vector<tropmat::NdType> Ts(std::initializer_list<const char*> texts, int d) {
  std::vector<tropmat::NdType> out;
  for (const char* t : texts) out.push_back(tropmat::NdType::parse(t, d));
  return out;
}

inline tropmat::Mask M(const std::string& text) { return tropmat::parse_mask(text); }

/// All nonempty subsets of [d] as 1-tuples.
inline tropmat::Tom hyperplane_tom(int d) {
  std::vector<tropmat::NdType> out;
  for (tropmat::Mask m : tropmat::nonempty_subsets(tropmat::full_mask(d))) out.emplace_back(d, std::vector{m});
  return tropmat::Tom(1, d, out);
}

inline tropmat::MixedSubdivision staircase() {
  return tropmat::MixedSubdivision(2, 3, Ts({"(123,1)", "(23,12)", "(3,123)"}, 3));
}

}  // namespace testing
