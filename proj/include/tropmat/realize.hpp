#pragma once

#include <optional>
#include <random>
#include <vector>

#include "tropmat/rational.hpp"
#include "tropmat/subdivision.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// n x d exact weights w(i,j), 1-based. Hyperplane i has apex -w_i.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(int n, int d);
  explicit WeightMatrix(std::vector<std::vector<Rational>> rows);

  int n() const { return n_; }
  int d() const { return d_; }
  const Rational& operator()(int i, int j) const { return w_[index(i, j)]; }
  Rational& operator()(int i, int j) { return w_[index(i, j)]; }

  WeightMatrix without_row(int i) const;
  WeightMatrix without_column(int j) const;
  WeightMatrix transposed() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * d_ + (j - 1); }
  int n_ = 0;
  int d_ = 0;
  std::vector<Rational> w_;
};

/// Projective point given by d coordinates.
using ProjectivePoint = std::vector<Rational>;
/// d nonnegative integers summing to n.
using LatticePoint = std::vector<int>;

/// Shifts so the last coordinate is 0.
ProjectivePoint canonical(const ProjectivePoint& p);

/// A_i = argmin_j (w_ij + p_j).
NdType point_type(const WeightMatrix& w, const ProjectivePoint& p);

/// Every lattice point of nΔ^{d-1}, lexicographically descending from
/// (n,0,...,0).
std::vector<LatticePoint> lattice_points(int n, int d);

/// Topes ({j_1},...,{j_n}) located at q with minimum cost sum_i w_{i,j_i}.
std::vector<NdType> lattice_tope(const WeightMatrix& w, const LatticePoint& q);

/// Some p with point_type(w, p) = a, if the type occurs.
std::optional<ProjectivePoint> type_witness(const WeightMatrix& w, const NdType& a);

/// All types of the arrangement: face closure of its vertices, found by
/// solving each spanning tree of K_{n,d}.
Tom realize_tom(const WeightMatrix& w);

/// Independent oracle: depth-first sweep over candidate types with a
/// Fourier-Motzkin feasibility test on every prefix.
Tom realize_tom_sweep(const WeightMatrix& w);

/// Every tropical minor has a unique minimizing matching.
bool is_generic(const WeightMatrix& w);

/// Random weights p/q with |p| <= 60, 1 <= q <= 6, redrawn until generic.
WeightMatrix random_generic_weights(int n, int d, std::mt19937_64& rng);

/// Maximal cells are the vertices of realize_tom(w).
MixedSubdivision regular_mixed_subdivision(const WeightMatrix& w);

}  // namespace tropmat
