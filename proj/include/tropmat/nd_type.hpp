#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropmat/mask.hpp"

namespace tropmat {

/// An (n,d)-type: n nonempty subsets of {1..d}. Positions are 1-based in
/// every public operation; operator[] is a 0-based container accessor.
class NdType {
 public:
  NdType() = default;

  /// Throws std::invalid_argument on an empty entry, a label above d,
  /// n = 0, or d outside 1..16.
  NdType(int d, std::vector<Mask> entries);

  /// Parses "(12,3,13)". Entries use parse_mask syntax.
  static NdType parse(const std::string& text, int d);

  int n() const { return static_cast<int>(entries_.size()); }
  int d() const { return d_; }

  Mask operator[](std::size_t index) const { return entries_[index]; }
  /// Entry at 1-based position.
  Mask at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  std::span<const Mask> entries() const { return entries_; }

  /// Union of all entries.
  Mask support() const;

  /// Every coordinate occurs in some entry.
  bool is_bounded() const { return support() == full_mask(d_); }

  /// All entries are singletons.
  bool is_total() const;

  /// Entrywise A_i ⊆ B_i.
  bool entrywise_subset_of(const NdType& other) const;

  std::string str() const;

  friend bool operator==(const NdType&, const NdType&) = default;
  /// Total order: d first, then entries lexicographically by bitmask value.
  friend std::strong_ordering operator<=>(const NdType& a, const NdType& b);

 private:
  int d_ = 0;
  std::vector<Mask> entries_;
};

struct NdTypeHash {
  std::size_t operator()(const NdType& t) const noexcept;
};

/// Bipartite graph K_A on position nodes N_1..N_n and coordinate nodes
/// D_1..D_d, with edge {N_i, D_j} iff j ∈ A_i.
struct TypeGraph {
  int n = 0;
  int d = 0;
  std::vector<std::pair<int, int>> edges;  // (position, coordinate), 1-based
};

TypeGraph type_graph(const NdType& a);

/// Number of connected components of K_A.
int component_count(const NdType& a);

/// Components of K_A minus one (0 for vertices, d-1 for topes).
int dimension(const NdType& a);

/// Dimension of the Minkowski cell sum_i conv{e_j : j ∈ A_i}, i.e.
/// d - component_count(A). Full-dimensional cells have d-1.
int cell_dimension(const NdType& a);

/// K_A has no cycle (as an undirected graph).
bool type_graph_acyclic(const NdType& a);

/// Number of edges of K_A, sum_i |A_i|.
int edge_count(const NdType& a);

/// Graphviz rendering of K_A.
std::string type_graph_dot(const NdType& a);

}  // namespace tropmat
