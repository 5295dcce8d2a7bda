#pragma once

#include <string>
#include <vector>

#include "tropmat/nd_type.hpp"

namespace tropmat {

struct ComparabilityEdge {
  int from = 0;  // coordinate label
  int to = 0;
  bool directed = false;
  int position = 0;  // originating position, 1-based

  friend bool operator==(const ComparabilityEdge&, const ComparabilityEdge&) = default;
};

/// Mixed multigraph CG_{A,B} on node set [d], loops omitted.
struct ComparabilityGraph {
  int d = 0;
  std::vector<ComparabilityEdge> edges;
};

/// For each position i, one edge per j ∈ A_i, k ∈ B_i, j != k; undirected
/// iff j,k ∈ A_i ∩ B_i (then listed once, j < k), otherwise directed j -> k.
ComparabilityGraph comparability_graph(const NdType& a, const NdType& b);

/// No closed walk that uses at least one directed edge, traversing
/// undirected edges freely and directed edges forward.
bool is_acyclic(const ComparabilityGraph& g);

/// is_acyclic(comparability_graph(a, b)) on bitmasks, no edge list built.
bool comparable(const NdType& a, const NdType& b);

/// Same graph with every directed edge reversed.
ComparabilityGraph reversed(const ComparabilityGraph& g);

std::string comparability_dot(const ComparabilityGraph& g);

}  // namespace tropmat
