#include "tropmat/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tropmat/comparability.hpp"
#include "tropmat/partition.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

namespace {

Rational power(int base, int exp) {
  Rational r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

// Lattice points sum_i e_{j_i}, j_i ∈ entries[i], projected to the first
// d-1 coordinates.
std::vector<Point> minkowski_points(const std::vector<Mask>& entries, int d) {
  std::set<std::vector<int>> sums{std::vector<int>(static_cast<std::size_t>(d), 0)};
  for (Mask e : entries) {
    std::set<std::vector<int>> next;
    for (const std::vector<int>& q : sums) {
      for (int j : labels(e)) {
        std::vector<int> r = q;
        ++r[j - 1];
        next.insert(std::move(r));
      }
    }
    sums = std::move(next);
  }
  std::vector<Point> out;
  for (const std::vector<int>& q : sums) {
    Point p;
    for (int k = 0; k + 1 < d; ++k) p.emplace_back(q[k]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

MixedSubdivision::MixedSubdivision(int n, int d, std::vector<NdType> maximal_cells)
    : n_(n), d_(d), cells_(std::move(maximal_cells)) {
  if (n < 1 || d < 1 || d > kMaxLabels) throw std::invalid_argument("bad subdivision parameters");
  for (const NdType& c : cells_) {
    if (c.n() != n || c.d() != d) throw std::invalid_argument("cell " + c.str() + " has the wrong shape");
  }
  normalize(cells_);
}

std::vector<NdType> MixedSubdivision::all_cells() const { return face_closure(cells_); }

Rational cell_volume(const NdType& a) {
  if (cell_dimension(a) != a.d() - 1) throw std::invalid_argument("cell " + a.str() + " is not full-dimensional");
  if (a.d() == 1) return 1;
  std::vector<Point> vertices;
  for (const NdType& f : faces(a)) {
    if (!f.is_total()) continue;
    const std::vector<int> q = tope_location(f);
    vertices.emplace_back(q.begin(), q.end() - 1);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return normalized_volume(vertices);
}

SubdivisionReport verify_subdivision(const MixedSubdivision& s) {
  SubdivisionReport report;
  const auto& cells = s.maximal_cells();
  for (const NdType& c : cells) {
    if (cell_dimension(c) != s.d() - 1) {
      report.failures.push_back({"dimension", {c}, "cell dimension " + std::to_string(cell_dimension(c))});
    }
  }
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a != b && is_face(cells[a], cells[b])) {
        report.failures.push_back({"face", {cells[a], cells[b]}, "maximal cell is a face of another"});
      }
      if (a < b && !comparable(cells[a], cells[b])) {
        report.failures.push_back({"comparability", {cells[a], cells[b]}, "comparability graph has a cycle"});
      }
    }
  }
  report.volume = 0;
  for (const NdType& c : cells) {
    if (cell_dimension(c) == s.d() - 1) report.volume += cell_volume(c);
  }
  const Rational expected = power(s.n(), s.d() - 1);
  if (report.volume != expected) {
    report.failures.push_back(
        {"volume", {}, "total volume " + to_string(report.volume) + " != " + to_string(expected)});
  }
  report.pass = report.failures.empty();
  return report;
}

std::vector<int> tope_location(const NdType& tope) {
  std::vector<int> q(static_cast<std::size_t>(tope.d()), 0);
  for (Mask e : tope.entries()) {
    if (popcount(e) != 1) throw std::invalid_argument(tope.str() + " is not a tope");
    ++q[lowest(e) - 1];
  }
  return q;
}

TopeMap topes_of(const MixedSubdivision& s) {
  TopeMap out;
  for (const NdType& c : s.all_cells()) {
    if (c.is_total()) out[tope_location(c)].push_back(c);
  }
  return out;
}

MixedSubdivision from_tom(const Tom& m) {
  std::vector<NdType> maximal;
  for (const NdType& a : m.types()) {
    const bool dominated = std::any_of(m.begin(), m.end(), [&](const NdType& b) { return b != a && is_face(a, b); });
    if (!dominated) maximal.push_back(a);
  }
  return MixedSubdivision(m.n(), m.d(), std::move(maximal));
}

Tom to_tom(const MixedSubdivision& s) { return Tom(s.n(), s.d(), s.all_cells()); }

NdType product_cell_to_type(int n, int d, const std::vector<std::pair<int, int>>& vertices) {
  std::vector<Mask> entries(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : vertices) {
    if (i < 1 || i > n || j < 1 || j > d) throw std::invalid_argument("vertex outside the product of simplices");
    entries[i - 1] |= bit(j);
  }
  for (int i = 1; i <= n; ++i) {
    if (entries[i - 1] == 0) throw std::invalid_argument("position " + std::to_string(i) + " is not covered");
  }
  return NdType(d, std::move(entries));
}

std::vector<std::pair<int, int>> type_to_product_cell(const NdType& a) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= a.n(); ++i) {
    for (int j : labels(a.at(i))) out.emplace_back(i, j);
  }
  return out;
}

bool is_fine(const MixedSubdivision& s) {
  return std::all_of(s.maximal_cells().begin(), s.maximal_cells().end(),
                     [](const NdType& c) { return type_graph_acyclic(c); });
}

bool cells_intersect_properly(const NdType& a, const NdType& b) {
  const int dim = a.d() - 1;
  if (dim == 0) return true;
  const auto ha = h_representation(minkowski_points({a.entries().begin(), a.entries().end()}, a.d()));
  const auto hb = h_representation(minkowski_points({b.entries().begin(), b.entries().end()}, b.d()));
  std::vector<Mask> meet;
  for (int i = 0; i < a.n(); ++i) meet.push_back(static_cast<Mask>(a[i] & b[i]));
  if (std::find(meet.begin(), meet.end(), Mask{0}) != meet.end()) return !systems_intersect(ha, hb, dim);
  const NdType common(a.d(), meet);
  if (!is_face(common, a) || !is_face(common, b)) return false;
  std::vector<LinearConstraint> both = ha;
  both.insert(both.end(), hb.begin(), hb.end());
  return region_inside(both, h_representation(minkowski_points(meet, a.d())), dim);
}

}  // namespace tropmat
