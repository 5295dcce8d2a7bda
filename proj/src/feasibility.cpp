#include "tropmat/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tropmat {

namespace {

// value + eps * epsilon, compared lexicographically.
struct Weight {
  Rational value;
  long eps = 0;
};

bool less(const Weight& x, const Weight& y) {
  if (x.value != y.value) return x.value < y.value;
  return x.eps < y.eps;
}

Weight plus(const Weight& x, const Weight& y) { return Weight{x.value + y.value, x.eps + y.eps}; }

struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
};

bool is_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// 0 >= rhs (or 0 > rhs).
bool trivially_true(const Row& r) { return r.strict ? sgn(r.rhs) < 0 : sgn(r.rhs) <= 0; }

// Keeps the strongest constraint per direction after scaling the first
// nonzero coefficient to magnitude one.
class RowSet {
 public:
  bool add(Row r) {
    if (is_zero(r.coeffs)) return trivially_true(r);
    Rational lead;
    for (const Rational& c : r.coeffs) {
      if (sgn(c) != 0) {
        lead = abs(c);
        break;
      }
    }
    for (Rational& c : r.coeffs) c /= lead;
    r.rhs /= lead;
    auto [it, inserted] = rows_.try_emplace(r.coeffs, r.rhs, r.strict);
    if (!inserted) {
      auto& [rhs, strict] = it->second;
      if (r.rhs > rhs || (r.rhs == rhs && r.strict)) {
        rhs = r.rhs;
        strict = r.strict;
      }
    }
    return true;
  }

  std::vector<Row> rows() const {
    std::vector<Row> out;
    for (const auto& [coeffs, bound] : rows_) out.push_back(Row{coeffs, bound.first, bound.second});
    return out;
  }

 private:
  std::map<std::vector<Rational>, std::pair<Rational, bool>> rows_;
};

}  // namespace

std::optional<std::vector<Rational>> solve_differences(int vars, const std::vector<DifferenceConstraint>& constraints) {
  // x_a - x_b >= c  <=>  x_b <= x_a - c: edge a -> b of weight (-c, -strict).
  struct Edge {
    int from;
    int to;
    Weight w;
  };
  std::vector<Edge> edges;
  edges.reserve(constraints.size());
  for (const DifferenceConstraint& k : constraints) {
    if (k.a < 0 || k.a >= vars || k.b < 0 || k.b >= vars) throw std::out_of_range("difference constraint variable");
    edges.push_back(Edge{k.a, k.b, Weight{-k.c, k.strict ? -1 : 0}});
  }
  std::vector<Weight> dist(static_cast<std::size_t>(vars));
  bool changed = true;
  for (int round = 0; round <= vars && changed; ++round) {
    changed = false;
    for (const Edge& e : edges) {
      const Weight via = plus(dist[e.from], e.w);
      if (less(via, dist[e.to])) {
        if (round == vars) return std::nullopt;
        dist[e.to] = via;
        changed = true;
      }
    }
  }

  // Pick a positive epsilon small enough for every constraint.
  Rational eps = 1;
  for (const DifferenceConstraint& k : constraints) {
    const Rational dv = dist[k.a].value - dist[k.b].value - k.c;
    const long de = dist[k.a].eps - dist[k.b].eps - (k.strict ? 1 : 0);
    if (sgn(dv) > 0 && de < 0) eps = std::min(eps, Rational(dv / (2 * (-de))));
  }
  std::vector<Rational> x(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) x[v] = dist[v].value + eps * dist[v].eps;
  return x;
}

bool fourier_motzkin_feasible(int vars, std::vector<LinearConstraint> constraints) {
  for (const LinearConstraint& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != vars) throw std::invalid_argument("constraint width mismatch");
  }

  // Substitute equalities away.
  std::vector<Row> rows;
  std::vector<LinearConstraint> equalities;
  for (LinearConstraint& c : constraints) {
    if (c.rel == Relation::kEqual) {
      equalities.push_back(std::move(c));
    } else {
      rows.push_back(Row{std::move(c.coeffs), std::move(c.rhs), c.rel == Relation::kGreater});
    }
  }
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    LinearConstraint& eq = equalities[e];
    int pivot = -1;
    for (int v = 0; v < vars; ++v) {
      if (sgn(eq.coeffs[v]) != 0) {
        pivot = v;
        break;
      }
    }
    if (pivot < 0) {
      if (sgn(eq.rhs) != 0) return false;
      continue;
    }
    const Rational p = eq.coeffs[pivot];
    auto eliminate = [&](std::vector<Rational>& coeffs, Rational& rhs) {
      if (sgn(coeffs[pivot]) == 0) return;
      const Rational f = coeffs[pivot] / p;
      for (int v = 0; v < vars; ++v) coeffs[v] -= f * eq.coeffs[v];
      rhs -= f * eq.rhs;
    };
    for (std::size_t g = e + 1; g < equalities.size(); ++g) eliminate(equalities[g].coeffs, equalities[g].rhs);
    for (Row& r : rows) eliminate(r.coeffs, r.rhs);
  }

  RowSet current;
  for (Row& r : rows) {
    if (!current.add(std::move(r))) return false;
  }
  for (;;) {
    std::vector<Row> live = current.rows();
    if (live.empty()) return true;
    // Eliminate the variable with the fewest generated pairs.
    int best = -1;
    std::size_t best_cost = 0;
    for (int v = 0; v < vars; ++v) {
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const Row& r : live) {
        if (sgn(r.coeffs[v]) > 0) ++pos;
        if (sgn(r.coeffs[v]) < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      const std::size_t cost = pos * neg;
      if (best < 0 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    RowSet next;
    std::vector<const Row*> lower;
    std::vector<const Row*> upper;
    for (const Row& r : live) {
      const int s = sgn(r.coeffs[best]);
      if (s > 0) {
        lower.push_back(&r);
      } else if (s < 0) {
        upper.push_back(&r);
      } else if (!next.add(r)) {
        return false;
      }
    }
    for (const Row* lo : lower) {
      for (const Row* up : upper) {
        // Scale so the eliminated coefficients cancel, then add.
        const Rational fl = -up->coeffs[best];
        const Rational fu = lo->coeffs[best];
        Row sum;
        sum.coeffs.resize(static_cast<std::size_t>(vars));
        for (int v = 0; v < vars; ++v) sum.coeffs[v] = fl * lo->coeffs[v] + fu * up->coeffs[v];
        sum.coeffs[best] = 0;
        sum.rhs = fl * lo->rhs + fu * up->rhs;
        sum.strict = lo->strict || up->strict;
        if (!next.add(std::move(sum))) return false;
      }
    }
    current = std::move(next);
  }
}

}  // namespace tropmat
