#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/partition.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// Offending data of a failed axiom. `index` is the missing coordinate
/// (boundary) or the position j (elimination).
struct AxiomWitness {
  std::vector<NdType> types;
  int index = 0;
  std::optional<OrderedPartition> partition;
  std::string describe() const;
};

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

AxiomReport check_boundary(const Tom& m);
AxiomReport check_comparability(const Tom& m);
AxiomReport check_elimination(const Tom& m);
AxiomReport check_surrounding(const Tom& m);

/// Boundary, comparability, elimination, surrounding, in that order.
std::vector<AxiomReport> check_all(const Tom& m);
bool all_pass(const std::vector<AxiomReport>& reports);

/// Some C in m with C_j = A_j ∪ B_j and C_k ∈ {A_k, B_k, A_k ∪ B_k}.
/// Position j is 1-based.
std::optional<NdType> find_elimination(const Tom& m, const NdType& a, const NdType& b, int j);

bool is_general_position(const Tom& m);
std::vector<NdType> vertices(const Tom& m);
std::vector<NdType> topes(const Tom& m);

}  // namespace tropmat
