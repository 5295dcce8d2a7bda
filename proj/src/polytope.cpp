#include "tropmat/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace tropmat {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m.front().size());
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational lead = m[row][col];
    for (Rational& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of { x : m x = 0 }.
std::vector<std::vector<Rational>> null_space(Matrix m, int cols) {
  const std::vector<int> pivots = row_reduce(m);
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Rows (x, 1) for the chosen points.
Matrix homogeneous(const std::vector<Point>& points, const std::vector<int>& subset) {
  Matrix m;
  for (int idx : subset) {
    std::vector<Rational> row = points[idx];
    row.emplace_back(1);
    m.push_back(std::move(row));
  }
  return m;
}

Rational evaluate(const std::vector<Rational>& f, const Point& x) {
  Rational v = f.back();
  for (std::size_t k = 0; k < x.size(); ++k) v += f[k] * x[k];
  return v;
}

int affine_rank(const std::vector<Point>& points, const std::vector<int>& subset) {
  if (subset.empty()) return -1;
  Matrix m = homogeneous(points, subset);
  return static_cast<int>(row_reduce(m).size()) - 1;
}

Rational determinant(Matrix m) {
  const std::size_t k = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = col;
    while (sel < k && sgn(m[sel][col]) == 0) ++sel;
    if (sel == k) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Supporting functional of a facet, oriented nonnegative on the subset.
std::vector<Rational> facet_functional(const std::vector<Point>& points, const std::vector<int>& subset,
                                       const std::vector<int>& facet) {
  const int cols = static_cast<int>(points.front().size()) + 1;
  for (std::vector<Rational>& f : null_space(homogeneous(points, facet), cols)) {
    for (int idx : subset) {
      const int s = sgn(evaluate(f, points[idx]));
      if (s == 0) continue;
      if (s < 0) {
        for (Rational& x : f) x = -x;
      }
      return f;
    }
  }
  throw std::logic_error("facet spans the whole point set");
}

std::vector<std::vector<int>> triangulate(const std::vector<Point>& points, const std::vector<int>& subset, int dim) {
  if (dim == 0) return {{subset.front()}};
  const int apex = subset.front();
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& facet : facets(points, subset)) {
    if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
    for (std::vector<int>& simplex : triangulate(points, facet, dim - 1)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

int affine_dimension(const std::vector<Point>& points) {
  std::vector<int> all(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) all[k] = static_cast<int>(k);
  return affine_rank(points, all);
}

std::vector<std::vector<int>> facets(const std::vector<Point>& points, const std::vector<int>& subset) {
  const int dim = affine_rank(points, subset);
  std::set<std::vector<int>> found;
  if (dim < 1) return {};
  const int cols = static_cast<int>(points.front().size()) + 1;
  std::vector<int> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == dim) {
      for (const std::vector<int>& f : found) {
        if (std::includes(f.begin(), f.end(), pick.begin(), pick.end())) return;
      }
      if (affine_rank(points, pick) != dim - 1) return;
      for (const std::vector<Rational>& f : null_space(homogeneous(points, pick), cols)) {
        int above = 0;
        int below = 0;
        std::vector<int> on;
        for (int idx : subset) {
          const int s = sgn(evaluate(f, points[idx]));
          if (s > 0) ++above;
          if (s < 0) ++below;
          if (s == 0) on.push_back(idx);
        }
        if (above + below == 0) continue;  // vanishes on the whole hull
        if (above == 0 || below == 0) {
          std::sort(on.begin(), on.end());
          found.insert(std::move(on));
        }
        return;
      }
      return;
    }
    for (std::size_t k = from; k < subset.size(); ++k) {
      pick.push_back(subset[k]);
      choose(k + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> pulling_triangulation(const std::vector<Point>& points) {
  if (points.empty()) return {};
  std::vector<int> all(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) all[k] = static_cast<int>(k);
  return triangulate(points, all, affine_rank(points, all));
}

Rational normalized_volume(const std::vector<Point>& points) {
  if (points.empty()) return 0;
  const std::size_t k = points.front().size();
  if (affine_dimension(points) != static_cast<int>(k)) throw std::invalid_argument("points do not span the space");
  Rational total = 0;
  for (const std::vector<int>& simplex : pulling_triangulation(points)) {
    Matrix m;
    for (std::size_t r = 1; r < simplex.size(); ++r) {
      std::vector<Rational> row(k);
      for (std::size_t c = 0; c < k; ++c) row[c] = points[simplex[r]][c] - points[simplex[0]][c];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  return total;
}

std::vector<LinearConstraint> h_representation(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const int k = static_cast<int>(points.front().size());
  std::vector<int> all(points.size());
  for (std::size_t idx = 0; idx < points.size(); ++idx) all[idx] = static_cast<int>(idx);
  std::vector<LinearConstraint> out;
  for (const std::vector<Rational>& f : null_space(homogeneous(points, all), k + 1)) {
    out.push_back(LinearConstraint{{f.begin(), f.end() - 1}, Relation::kEqual, -f.back()});
  }
  for (const std::vector<int>& facet : facets(points, all)) {
    const std::vector<Rational> f = facet_functional(points, all, facet);
    out.push_back(LinearConstraint{{f.begin(), f.end() - 1}, Relation::kGreaterEqual, -f.back()});
  }
  return out;
}

bool systems_intersect(const std::vector<LinearConstraint>& a, const std::vector<LinearConstraint>& b, int dim) {
  std::vector<LinearConstraint> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return fourier_motzkin_feasible(dim, std::move(all));
}

bool region_inside(const std::vector<LinearConstraint>& region, const std::vector<LinearConstraint>& hull, int dim) {
  auto violated = [&](std::vector<Rational> coeffs, Rational rhs) {
    // Is there a point of the region with coeffs · x > rhs?
    std::vector<LinearConstraint> sys = region;
    sys.push_back(LinearConstraint{std::move(coeffs), Relation::kGreater, std::move(rhs)});
    return fourier_motzkin_feasible(dim, std::move(sys));
  };
  for (const LinearConstraint& c : hull) {
    std::vector<Rational> neg = c.coeffs;
    for (Rational& x : neg) x = -x;
    if (violated(neg, -c.rhs)) return false;  // a·x < b somewhere
    if (c.rel == Relation::kEqual && violated(c.coeffs, c.rhs)) return false;
  }
  return true;
}

}  // namespace tropmat
