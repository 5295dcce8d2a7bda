#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tropmat/axioms.hpp"
#include "tropmat/realize.hpp"

using namespace tropmat;
using testing::T;
using testing::Ts;

TEST_CASE("boundary") {
  CHECK(check_boundary(testing::hyperplane_tom(3)).pass);
  const AxiomReport r = check_boundary(Tom(2, 2, Ts({"(1,1)"}, 2)));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->index == 2);
}

TEST_CASE("comparability axiom") {
  const AxiomReport r = check_comparability(Tom(2, 2, Ts({"(1,2)", "(2,1)"}, 2)));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->types == Ts({"(1,2)", "(2,1)"}, 2));
  CHECK(check_comparability(Tom(2, 2, Ts({"(12,12)"}, 2))).pass);
}

TEST_CASE("elimination axiom") {
  const Tom full = testing::hyperplane_tom(3);
  CHECK(check_elimination(full).pass);
  CHECK(find_elimination(full, T("(1)", 3), T("(2)", 3), 1) == T("(12)", 3));

  std::vector<NdType> rest;
  for (const NdType& t : full) {
    if (t != T("(12)", 3)) rest.push_back(t);
  }
  const AxiomReport r = check_elimination(Tom(1, 3, rest));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->types == Ts({"(1)", "(2)"}, 3));
  CHECK(r.witness->index == 1);
}

TEST_CASE("surrounding axiom") {
  CHECK(check_surrounding(testing::hyperplane_tom(3)).pass);
  const AxiomReport r = check_surrounding(Tom(1, 3, Ts({"(123)"}, 3)));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->partition.has_value());
}

TEST_CASE("check_all") {
  CHECK(all_pass(check_all(testing::hyperplane_tom(3))));
  const auto empty = check_all(Tom(1, 3, {}));
  CHECK_FALSE(empty[0].pass);
  CHECK(empty[0].axiom == "boundary");
}

TEST_CASE("general position, vertices, topes") {
  const Tom full = testing::hyperplane_tom(3);
  CHECK(is_general_position(full));
  CHECK(vertices(full) == Ts({"(123)"}, 3));
  CHECK(topes(full) == Ts({"(1)", "(2)", "(3)"}, 3));
  CHECK_FALSE(is_general_position(Tom(2, 2, Ts({"(12,12)", "(1,1)", "(2,2)"}, 2))));
}

TEST_CASE("realized TOMs satisfy the axioms") {
  std::mt19937_64 rng(21);
  for (auto [n, d] : {std::pair{2, 3}, {3, 3}, {2, 2}}) {
    for (int round = 0; round < 5; ++round) {
      const Tom m = realize_tom(random_generic_weights(n, d, rng));
      const auto reports = check_all(m);
      CHECK(all_pass(reports));
      CHECK(is_general_position(m));
      for (const NdType& a : m) {
        int excess = 0;
        for (Mask e : a.entries()) excess += popcount(e) - 1;
        CHECK(excess <= d - 1);
      }
      CHECK(face_closure(vertices(m)) == m.types());
    }
  }
}

TEST_CASE("find_elimination matches the definition") {
  std::mt19937_64 rng(5);
  const Tom m = realize_tom(random_generic_weights(3, 3, rng));
  const auto& ts = m.types();
  for (std::size_t x = 0; x < ts.size(); x += 3) {
    for (std::size_t y = 0; y < ts.size(); y += 5) {
      for (int j = 1; j <= 3; ++j) {
        CHECK(find_elimination(m, ts[x], ts[y], j).has_value() == oracle::eliminates(ts, ts[x], ts[y], j));
      }
    }
  }
}
