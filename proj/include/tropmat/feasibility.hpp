#pragma once

#include <optional>
#include <vector>

#include "tropmat/rational.hpp"

namespace tropmat {

/// x_a - x_b >= c, or > c when strict. Variables are 0-based.
struct DifferenceConstraint {
  int a = 0;
  int b = 0;
  Rational c;
  bool strict = false;
};

/// A solution of the system, or nullopt when infeasible. Strict
/// inequalities are handled exactly by lexicographic (value, epsilon)
/// shortest paths; the returned point satisfies every constraint.
std::optional<std::vector<Rational>> solve_differences(int vars, const std::vector<DifferenceConstraint>& constraints);

enum class Relation { kEqual, kGreaterEqual, kGreater };

/// coeffs · x  rel  rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::kGreaterEqual;
  Rational rhs;
};

/// Exact Fourier-Motzkin elimination with strict/weak bookkeeping.
bool fourier_motzkin_feasible(int vars, std::vector<LinearConstraint> constraints);

}  // namespace tropmat
