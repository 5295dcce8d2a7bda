#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropmat/nd_type.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// Mixed subdivision of nΔ^{d-1}, stored by its maximal cells.
class MixedSubdivision {
 public:
  MixedSubdivision() = default;
  /// Shape-checks and sorts the cells.
  MixedSubdivision(int n, int d, std::vector<NdType> maximal_cells);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<NdType>& maximal_cells() const { return cells_; }
  /// Every face of every maximal cell, sorted.
  std::vector<NdType> all_cells() const;

  friend bool operator==(const MixedSubdivision&, const MixedSubdivision&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<NdType> cells_;
};

/// kind is "dimension", "face", "comparability" or "volume".
struct SubdivisionFailure {
  std::string kind;
  std::vector<NdType> witness;
  std::string detail;
};

struct SubdivisionReport {
  bool pass = true;
  Rational volume;
  std::vector<SubdivisionFailure> failures;
};

SubdivisionReport verify_subdivision(const MixedSubdivision& s);

/// Normalized volume of the Minkowski cell sum_i conv{e_j : j ∈ A_i},
/// by exact triangulation. Throws unless cell_dimension(A) = d-1.
Rational cell_volume(const NdType& a);

/// Lattice point q = sum_i e_{j_i} of a tope ({j_1},...,{j_n}).
std::vector<int> tope_location(const NdType& tope);

/// Lattice point -> topes of the subdivision located there.
using TopeMap = std::map<std::vector<int>, std::vector<NdType>>;
TopeMap topes_of(const MixedSubdivision& s);

/// Face-maximal members of m.
MixedSubdivision from_tom(const Tom& m);
Tom to_tom(const MixedSubdivision& s);

/// Vertex (i,j) of Δ^{n-1} x Δ^{d-1} <-> edge {N_i, D_j}.
NdType product_cell_to_type(int n, int d, const std::vector<std::pair<int, int>>& vertices);
std::vector<std::pair<int, int>> type_to_product_cell(const NdType& a);

/// Every maximal cell has an acyclic type graph.
bool is_fine(const MixedSubdivision& s);

/// Geometric oracle for proper intersection: the closed cells meet
/// exactly in sum_i conv(A_i ∩ B_i), and that cell is a face of both.
/// Exact, via Fourier-Motzkin.
bool cells_intersect_properly(const NdType& a, const NdType& b);

}  // namespace tropmat
