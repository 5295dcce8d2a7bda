// Independent reference implementations used to cross-check the library.
#pragma once

#include <vector>

#include "tropmat/nd_type.hpp"
#include "tropmat/partition.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/realize.hpp"

namespace oracle {

using tropmat::Mask;
using tropmat::NdType;

/// Normalized volume of sum_i conv{e_j : j ∈ A_i} by Postnikov's
/// draconian-sequence formula.
tropmat::Rational minkowski_volume(const NdType& a);

/// Every ordered partition of [d], built recursively by block choice.
std::vector<tropmat::OrderedPartition> ordered_partitions(int d);

/// Faces straight from the definition over ordered_partitions above.
std::vector<NdType> faces(const NdType& a);

/// Mixed-graph cycle test by reachability: some directed edge u→v with u
/// reachable from v along undirected edges and forward directed edges.
bool acyclic(const NdType& a, const NdType& b);

/// Binomial coefficient.
long long choose(int n, int k);

/// Point types of W at all points of a fine rational grid around the
/// apices, plus every tope at a lattice point (sanity sampler).
std::vector<NdType> sampled_types(const tropmat::WeightMatrix& w, int steps);

/// Elimination witness by the definition, over a plain vector.
bool eliminates(const std::vector<NdType>& m, const NdType& a, const NdType& b, int j);

}  // namespace oracle
