#include "tropmat/realize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "tropmat/axioms.hpp"
#include "tropmat/feasibility.hpp"
#include "tropmat/partition.hpp"

namespace tropmat {

WeightMatrix::WeightMatrix(int n, int d) : n_(n), d_(d), w_(static_cast<std::size_t>(n) * d) {
  if (n < 1 || d < 1 || d > kMaxLabels) throw std::invalid_argument("weight matrix needs n >= 1 and 1 <= d <= 16");
}

WeightMatrix::WeightMatrix(std::vector<std::vector<Rational>> rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("weight matrix is empty");
  *this = WeightMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 1; i <= n_; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != d_) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(rows[i - 1].size()) +
                                  " entries, expected " + std::to_string(d_));
    }
    for (int j = 1; j <= d_; ++j) (*this)(i, j) = rows[i - 1][j - 1];
  }
}

WeightMatrix WeightMatrix::without_row(int r) const {
  WeightMatrix out(n_ - 1, d_);
  for (int i = 1, k = 1; i <= n_; ++i) {
    if (i == r) continue;
    for (int j = 1; j <= d_; ++j) out(k, j) = (*this)(i, j);
    ++k;
  }
  return out;
}

WeightMatrix WeightMatrix::without_column(int c) const {
  WeightMatrix out(n_, d_ - 1);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1, k = 1; j <= d_; ++j) {
      if (j == c) continue;
      out(i, k++) = (*this)(i, j);
    }
  }
  return out;
}

WeightMatrix WeightMatrix::transposed() const {
  WeightMatrix out(d_, n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= d_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ProjectivePoint canonical(const ProjectivePoint& p) {
  ProjectivePoint out = p;
  const Rational shift = p.back();
  for (Rational& x : out) x -= shift;
  return out;
}

NdType point_type(const WeightMatrix& w, const ProjectivePoint& p) {
  if (static_cast<int>(p.size()) != w.d()) throw std::invalid_argument("point has the wrong number of coordinates");
  std::vector<Mask> entries(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) {
    Rational best = w(i, 1) + p[0];
    Mask arg = bit(1);
    for (int j = 2; j <= w.d(); ++j) {
      const Rational v = w(i, j) + p[j - 1];
      if (v < best) {
        best = v;
        arg = bit(j);
      } else if (v == best) {
        arg |= bit(j);
      }
    }
    entries[i - 1] = arg;
  }
  return NdType(w.d(), std::move(entries));
}

std::vector<LatticePoint> lattice_points(int n, int d) {
  std::vector<LatticePoint> out;
  LatticePoint q(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> fill = [&](int coord, int left) {
    if (coord == d - 1) {
      q[coord] = left;
      out.push_back(q);
      return;
    }
    for (int v = left; v >= 0; --v) {
      q[coord] = v;
      fill(coord + 1, left - v);
    }
  };
  fill(0, n);
  return out;
}

std::vector<NdType> lattice_tope(const WeightMatrix& w, const LatticePoint& q) {
  if (static_cast<int>(q.size()) != w.d() || std::accumulate(q.begin(), q.end(), 0) != w.n()) {
    throw std::invalid_argument("lattice point does not lie in the dilated simplex");
  }
  std::vector<NdType> best;
  Rational best_cost;
  LatticePoint left = q;
  std::vector<Mask> choice(static_cast<std::size_t>(w.n()));
  std::function<void(int, const Rational&)> walk = [&](int i, const Rational& cost) {
    if (i > w.n()) {
      if (best.empty() || cost < best_cost) {
        best.clear();
        best_cost = cost;
      }
      if (cost == best_cost) best.emplace_back(w.d(), choice);
      return;
    }
    for (int j = 1; j <= w.d(); ++j) {
      if (left[j - 1] == 0) continue;
      --left[j - 1];
      choice[i - 1] = bit(j);
      walk(i + 1, cost + w(i, j));
      ++left[j - 1];
    }
  };
  walk(1, Rational(0));
  normalize(best);
  return best;
}

std::optional<ProjectivePoint> type_witness(const WeightMatrix& w, const NdType& a) {
  if (a.n() != w.n() || a.d() != w.d()) throw std::invalid_argument("type and weights disagree on (n,d)");
  std::vector<DifferenceConstraint> cs;
  for (int i = 1; i <= w.n(); ++i) {
    const int j0 = lowest(a.at(i));
    for (int j = 1; j <= w.d(); ++j) {
      if (j == j0) continue;
      // Tie: p_j - p_j0 = w_ij0 - w_ij. Outside: p_j - p_j0 > w_ij0 - w_ij.
      const Rational c = w(i, j0) - w(i, j);
      if (contains(a.at(i), j)) {
        cs.push_back({j - 1, j0 - 1, c, false});
        cs.push_back({j0 - 1, j - 1, -c, false});
      } else {
        cs.push_back({j - 1, j0 - 1, c, true});
      }
    }
  }
  auto p = solve_differences(w.d(), cs);
  if (!p) return std::nullopt;
  return canonical(*p);
}

namespace {

// Calls visit(edges) for every spanning tree of K_{n,d}; edge e stands
// for (e / d + 1, e % d + 1).
void for_each_spanning_tree(int n, int d, const std::function<void(const std::vector<int>&)>& visit) {
  const int nodes = n + d;
  const int total = n * d;
  std::vector<int> chosen;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : find(parent[x]); };
  std::function<void(int)> grow = [&](int next) {
    if (static_cast<int>(chosen.size()) == nodes - 1) {
      visit(chosen);
      return;
    }
    if (total - next < nodes - 1 - static_cast<int>(chosen.size())) return;
    for (int e = next; e < total; ++e) {
      const int u = find(e / d);
      const int v = find(n + e % d);
      if (u == v) continue;
      parent[u] = v;
      chosen.push_back(e);
      grow(e + 1);
      chosen.pop_back();
      parent[u] = u;
    }
  };
  std::iota(parent.begin(), parent.end(), 0);
  grow(0);
}

}  // namespace

Tom realize_tom(const WeightMatrix& w) {
  const int n = w.n();
  const int d = w.d();
  std::set<NdType> found;
  for_each_spanning_tree(n, d, [&](const std::vector<int>& tree) {
    // Propagate w_ij + p_j = mu_i along the tree from p_d = 0.
    std::vector<std::optional<Rational>> p(static_cast<std::size_t>(d));
    std::vector<std::optional<Rational>> mu(static_cast<std::size_t>(n));
    p[d - 1] = Rational(0);
    for (bool progress = true; progress;) {
      progress = false;
      for (int e : tree) {
        const int i = e / d;
        const int j = e % d;
        if (p[j] && !mu[i]) {
          mu[i] = w(i + 1, j + 1) + *p[j];
          progress = true;
        } else if (mu[i] && !p[j]) {
          p[j] = *mu[i] - w(i + 1, j + 1);
          progress = true;
        }
      }
    }
    ProjectivePoint point(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) point[j] = *p[j];
    const NdType a = point_type(w, point);
    for (int e : tree) {
      if (!contains(a[e / d], e % d + 1)) return;
    }
    found.insert(a);
  });
  return Tom(n, d, face_closure({found.begin(), found.end()}));
}

Tom realize_tom_sweep(const WeightMatrix& w) {
  const int n = w.n();
  const int d = w.d();
  // Variables: p_1..p_{d-1} (p_d = 0), then mu_1..mu_n.
  const int vars = d - 1 + n;
  std::vector<Mask> entries(static_cast<std::size_t>(n));
  std::vector<LinearConstraint> system;
  std::vector<NdType> out;
  const std::vector<Mask> choices = nonempty_subsets(full_mask(d));
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      out.emplace_back(d, entries);
      return;
    }
    for (Mask entry : choices) {
      const std::size_t mark = system.size();
      for (int j = 1; j <= d; ++j) {
        // p_j - mu_i  (= or >)  -w_ij
        LinearConstraint c;
        c.coeffs.assign(static_cast<std::size_t>(vars), Rational(0));
        if (j < d) c.coeffs[j - 1] = 1;
        c.coeffs[d - 1 + i] = -1;
        c.rel = contains(entry, j) ? Relation::kEqual : Relation::kGreater;
        c.rhs = -w(i + 1, j);
        system.push_back(std::move(c));
      }
      if (fourier_motzkin_feasible(vars, system)) {
        entries[i] = entry;
        extend(i + 1);
      }
      system.resize(mark);
    }
  };
  extend(0);
  return Tom(n, d, std::move(out));
}

bool is_generic(const WeightMatrix& w) {
  const int limit = std::min(w.n(), w.d());
  for (int k = 2; k <= limit; ++k) {
    for (Mask rows : nonempty_subsets(full_mask(w.n()))) {
      if (popcount(rows) != k) continue;
      for (Mask cols : nonempty_subsets(full_mask(w.d()))) {
        if (popcount(cols) != k) continue;
        const std::vector<int> r = labels(rows);
        std::vector<int> c = labels(cols);
        Rational best;
        int hits = 0;
        do {
          Rational sum = 0;
          for (int t = 0; t < k; ++t) sum += w(r[t], c[t]);
          if (hits == 0 || sum < best) {
            best = sum;
            hits = 1;
          } else if (sum == best) {
            ++hits;
          }
        } while (std::next_permutation(c.begin(), c.end()));
        if (hits > 1) return false;
      }
    }
  }
  return true;
}

WeightMatrix random_generic_weights(int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 6);
  for (;;) {
    WeightMatrix w(n, d);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= d; ++j) {
        w(i, j) = Rational(num(rng), den(rng));
        w(i, j).canonicalize();
      }
    }
    if (is_generic(w)) return w;
  }
}

MixedSubdivision regular_mixed_subdivision(const WeightMatrix& w) {
  return MixedSubdivision(w.n(), w.d(), vertices(realize_tom(w)));
}

}  // namespace tropmat
