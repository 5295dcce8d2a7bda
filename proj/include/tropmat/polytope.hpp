#pragma once

#include <vector>

#include "tropmat/feasibility.hpp"
#include "tropmat/rational.hpp"

namespace tropmat {

using Point = std::vector<Rational>;

/// Dimension of the affine hull (-1 for no points).
int affine_dimension(const std::vector<Point>& points);

/// Facets of conv(points[subset]) inside its affine hull, each as the
/// sorted indices of the points it contains.
std::vector<std::vector<int>> facets(const std::vector<Point>& points, const std::vector<int>& subset);

/// Pulling triangulation of conv(points): each simplex lists m+1 point
/// indices, m the affine dimension.
std::vector<std::vector<int>> pulling_triangulation(const std::vector<Point>& points);

/// Sum of |det| over a pulling triangulation; points must span R^k.
/// Equals k! times the Euclidean volume.
Rational normalized_volume(const std::vector<Point>& points);

/// Equalities of the affine hull plus one a·x >= b per facet.
std::vector<LinearConstraint> h_representation(const std::vector<Point>& points);

/// Some point satisfies every constraint of both systems.
bool systems_intersect(const std::vector<LinearConstraint>& a, const std::vector<LinearConstraint>& b, int dim);

/// Every point satisfying `region` satisfies `hull`.
bool region_inside(const std::vector<LinearConstraint>& region, const std::vector<LinearConstraint>& hull, int dim);

}  // namespace tropmat
