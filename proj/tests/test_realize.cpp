#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tropmat/axioms.hpp"
#include "tropmat/feasibility.hpp"
#include "tropmat/realize.hpp"

using namespace tropmat;
using testing::T;
using testing::Ts;

namespace {

WeightMatrix matrix(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const char* x : row) r.push_back(parse_rational(x));
    out.push_back(r);
  }
  return WeightMatrix(out);
}

ProjectivePoint point(std::vector<int> xs) {
  ProjectivePoint p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3.5") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("difference constraints") {
  // x0 - x1 > 0, x1 - x0 >= -1
  auto x = solve_differences(2, {{0, 1, Rational(0), true}, {1, 0, Rational(-1), false}});
  REQUIRE(x);
  CHECK((*x)[0] > (*x)[1]);
  CHECK((*x)[0] - (*x)[1] <= 1);
  CHECK_FALSE(solve_differences(2, {{0, 1, Rational(0), true}, {1, 0, Rational(0), false}}));
  CHECK(solve_differences(2, {{0, 1, Rational(0), false}, {1, 0, Rational(0), false}}));
}

TEST_CASE("fourier-motzkin") {
  using R = Relation;
  // x + y > 1, x < 0, y < 1 infeasible; relax y < 2 feasible.
  const auto row = [](int a, int b, R rel, int rhs) {
    return LinearConstraint{{Rational(a), Rational(b)}, rel, Rational(rhs)};
  };
  CHECK_FALSE(fourier_motzkin_feasible(2, {row(1, 1, R::kGreater, 1), row(-1, 0, R::kGreater, 0),
                                           row(0, -1, R::kGreater, -1)}));
  CHECK(fourier_motzkin_feasible(2, {row(1, 1, R::kGreater, 1), row(-1, 0, R::kGreater, 0),
                                     row(0, -1, R::kGreater, -2)}));
  CHECK(fourier_motzkin_feasible(2, {row(1, -1, R::kEqual, 3), row(1, 0, R::kGreaterEqual, 4)}));
  CHECK_FALSE(fourier_motzkin_feasible(2, {row(1, -1, R::kEqual, 3), row(-1, 1, R::kGreater, -3)}));
}

TEST_CASE("point types") {
  CHECK(point_type(matrix({{"0", "0", "0"}}), point({0, 0, 5})) == T("(12)", 3));
  CHECK(point_type(matrix({{"0", "0", "0"}}), point({0, 0, 0})) == T("(123)", 3));
  CHECK(point_type(matrix({{"0", "0"}, {"0", "1"}}), point({0, 0})) == T("(12,1)", 2));
  CHECK(canonical(point({3, 1, 2})) == point({1, -1, 0}));
}

TEST_CASE("lattice topes") {
  const WeightMatrix w = matrix({{"0", "0"}, {"0", "1"}});
  CHECK(lattice_tope(w, {1, 1}) == Ts({"(2,1)"}, 2));
  CHECK(lattice_tope(matrix({{"0", "0"}, {"0", "0"}}), {1, 1}) == Ts({"(1,2)", "(2,1)"}, 2));
  CHECK(lattice_tope(w, {2, 0}) == Ts({"(1,1)"}, 2));
  CHECK(lattice_points(2, 3).size() == 6);
  CHECK(lattice_points(2, 3).front() == LatticePoint{2, 0, 0});
  CHECK_THROWS(lattice_tope(w, {1, 0}));
}

TEST_CASE("realize_tom small cases") {
  const Tom single = realize_tom(matrix({{"1", "-2", "1/3"}}));
  CHECK(single == testing::hyperplane_tom(3));

  const Tom degenerate = realize_tom(matrix({{"0", "0"}, {"0", "0"}}));
  CHECK(degenerate.contains(T("(12,12)", 2)));
  CHECK_FALSE(is_general_position(degenerate));
  CHECK_FALSE(is_generic(matrix({{"0", "0"}, {"0", "0"}})));
  CHECK(degenerate == realize_tom_sweep(matrix({{"0", "0"}, {"0", "0"}})));

  const WeightMatrix w = matrix({{"0", "0", "0"}, {"0", "1", "-1/2"}});
  REQUIRE(is_generic(w));
  const Tom m = realize_tom(w);
  CHECK(vertices(m).size() == 3);
  CHECK(topes(m).size() == 6);
}

TEST_CASE("fast path, sweep and lattice topes agree") {
  std::mt19937_64 rng(99);
  for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (int round = 0; round < 6; ++round) {
      const WeightMatrix w = random_generic_weights(n, d, rng);
      const Tom m = realize_tom(w);
      CHECK(m == realize_tom_sweep(w));
      CHECK(static_cast<long long>(vertices(m).size()) == oracle::choose(n + d - 2, d - 1));
      CHECK(static_cast<long long>(topes(m).size()) == oracle::choose(n + d - 1, d - 1));
      std::vector<NdType> from_lattice;
      for (const LatticePoint& q : lattice_points(n, d)) {
        const auto here = lattice_tope(w, q);
        CHECK(here.size() == 1);
        from_lattice.insert(from_lattice.end(), here.begin(), here.end());
      }
      normalize(from_lattice);
      CHECK(from_lattice == topes(m));
      for (const NdType& t : oracle::sampled_types(w, 12)) CHECK(m.contains(t));
    }
  }
}

TEST_CASE("type witnesses reproduce their types") {
  std::mt19937_64 rng(17);
  const WeightMatrix w = random_generic_weights(3, 3, rng);
  const Tom m = realize_tom(w);
  for (const NdType& a : m) {
    const auto p = type_witness(w, a);
    REQUIRE(p);
    CHECK(point_type(w, *p) == a);
  }
  CHECK_FALSE(type_witness(w, T("(123,123,123)", 3)));
}

TEST_CASE("random points land in the realized TOM") {
  std::mt19937_64 rng(31);
  const WeightMatrix w = random_generic_weights(3, 3, rng);
  const Tom m = realize_tom(w);
  std::uniform_int_distribution<int> num(-300, 300);
  for (int k = 0; k < 1000; ++k) {
    const ProjectivePoint p{Rational(num(rng), 4), Rational(num(rng), 4), Rational(0)};
    CHECK(m.contains(point_type(w, p)));
  }
}

TEST_CASE("regular mixed subdivision") {
  const MixedSubdivision coarse = regular_mixed_subdivision(matrix({{"0", "0"}, {"0", "0"}}));
  CHECK(coarse.maximal_cells() == Ts({"(12,12)"}, 2));
  CHECK(verify_subdivision(coarse).pass);
  CHECK(regular_mixed_subdivision(matrix({{"0", "1", "2"}})).maximal_cells() == Ts({"(123)"}, 3));
  std::mt19937_64 rng(12);
  const MixedSubdivision s = regular_mixed_subdivision(random_generic_weights(2, 3, rng));
  CHECK(s.maximal_cells().size() == 3);
  const SubdivisionReport r = verify_subdivision(s);
  CHECK(r.pass);
  CHECK(r.volume == 4);
  CHECK(is_fine(s));
}
