#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tropmat/comparability.hpp"
#include "tropmat/nd_type.hpp"
#include "tropmat/partition.hpp"
#include "tropmat/tom.hpp"

using namespace tropmat;
using testing::M;
using testing::T;

namespace {

NdType random_type(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<int> pick(1, full_mask(d));
  std::vector<Mask> e;
  for (int i = 0; i < n; ++i) e.push_back(static_cast<Mask>(pick(rng)));
  return NdType(d, e);
}

}  // namespace

TEST_CASE("masks") {
  CHECK(mask_to_string(M("132")) == "123");
  CHECK(parse_mask("{1,10}") == (bit(1) | bit(10)));
  CHECK(mask_to_string(bit(1) | bit(10)) == "{1,10}");
  CHECK(labels(M("24")) == std::vector<int>{2, 4});
  CHECK(nonempty_subsets(full_mask(3)).size() == 7);
  CHECK_THROWS_AS(parse_mask("1a"), std::invalid_argument);
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS(NdType(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(NdType(2, {M("3")}), std::invalid_argument);
  CHECK_THROWS_AS(NdType(3, {}), std::invalid_argument);
  CHECK(T("(12,3,13)", 3).str() == "(12,3,13)");
  CHECK(T("(12,3,13)", 3).n() == 3);
}

TEST_CASE("type graph") {
  CHECK(type_graph(T("(123)", 3)).edges == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}});
  CHECK(type_graph(T("(1,2)", 2)).edges == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
  const NdType path = T("(12,23)", 3);
  CHECK(type_graph(path).edges.size() == 4);
  CHECK(type_graph_acyclic(path));
  CHECK(type_graph_dot(path).find("N1 -- D1") != std::string::npos);
}

TEST_CASE("dimension") {
  for (int n = 1; n <= 3; ++n) CHECK(dimension(NdType(3, std::vector<Mask>(n, M("1")))) == 2);
  CHECK(dimension(T("(123)", 3)) == 0);
  CHECK(dimension(T("(12,23)", 3)) == 0);
  CHECK(cell_dimension(T("(12,23)", 3)) == 2);
  CHECK(cell_dimension(T("(1,1)", 3)) == 0);
}

TEST_CASE("refine") {
  CHECK(refine(T("(123)", 3), OrderedPartition{{M("2"), M("13")}}) == T("(2)", 3));
  CHECK(refine(T("(13,2)", 3), OrderedPartition{{M("123")}}) == T("(13,2)", 3));
  CHECK(refine(T("(12,23)", 3), OrderedPartition{{M("3"), M("12")}}) == T("(12,3)", 3));
}

TEST_CASE("faces") {
  CHECK(faces(T("(1)", 1)) == std::vector{T("(1)", 1)});
  CHECK(faces(T("(123)", 3)).size() == 7);
  CHECK(faces(T("(12,12)", 2)) == testing::Ts({"(1,1)", "(2,2)", "(12,12)"}, 2));
  CHECK(ordered_partitions(3).size() == 13);
  CHECK(ordered_partitions(4).size() == 75);
}

TEST_CASE("is_face") {
  const NdType a = T("(12,12)", 2);
  CHECK(is_face(a, a));
  CHECK(is_face(T("(1,1)", 2), a));
  CHECK_FALSE(is_face(T("(1,2)", 2), a));
}

TEST_CASE("faces and is_face agree with the definition") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 4);
    const NdType a = random_type(rng, n, d);
    const std::vector<NdType> expected = oracle::faces(a);
    REQUIRE(faces(a) == expected);
    const NdType b = random_type(rng, n, d);
    CHECK(is_face(b, a) == std::binary_search(expected.begin(), expected.end(), b));
    for (const NdType& f : expected) {
      CHECK(is_face(f, a));
      CHECK(dimension(f) >= dimension(a));
      const std::vector<NdType> sub = faces(f);
      CHECK(std::includes(expected.begin(), expected.end(), sub.begin(), sub.end()));
    }
  }
}

TEST_CASE("refine is idempotent and raises dimension") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const NdType a = random_type(rng, 3, d);
    for (const OrderedPartition& p : ordered_partitions(d)) {
      const NdType b = refine(a, p);
      CHECK(refine(b, p) == b);
      // Refinement is a face, so its TOM dimension cannot drop.
      CHECK(dimension(b) >= dimension(a));
    }
  }
}

TEST_CASE("comparability graph") {
  const auto g1 = comparability_graph(T("(12)", 2), T("(12)", 2));
  REQUIRE(g1.edges.size() == 1);
  CHECK(std::all_of(g1.edges.begin(), g1.edges.end(), [](const auto& e) { return !e.directed; }));

  const auto g2 = comparability_graph(T("(1,2)", 2), T("(2,1)", 2));
  REQUIRE(g2.edges.size() == 2);
  CHECK(g2.edges[0] == ComparabilityEdge{1, 2, true, 1});
  CHECK(g2.edges[1] == ComparabilityEdge{2, 1, true, 2});
  CHECK_FALSE(is_acyclic(g2));

  const auto g3 = comparability_graph(T("(12)", 3), T("(23)", 3));
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : g3.edges) {
    CHECK(e.directed);
    arcs.emplace_back(e.from, e.to);
  }
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_acyclic(g3));
  CHECK(is_acyclic(g1));
  CHECK(comparability_dot(g3).find("1 -> 2") != std::string::npos);
}

TEST_CASE("acyclicity agrees with the reachability oracle") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 3000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 3);
    const NdType a = random_type(rng, n, d);
    const NdType b = random_type(rng, n, d);
    const bool expected = oracle::acyclic(a, b);
    REQUIRE(is_acyclic(comparability_graph(a, b)) == expected);
    CHECK(comparable(a, b) == expected);
    CHECK(comparable(b, a) == is_acyclic(reversed(comparability_graph(a, b))));
    CHECK(comparable(a, a));
  }
}

TEST_CASE("tom container") {
  const Tom m(1, 2, testing::Ts({"(2)", "(1)", "(2)"}, 2));
  CHECK(m.size() == 2);
  CHECK(m.contains(T("(1)", 2)));
  CHECK_FALSE(m.contains(T("(12)", 2)));
  CHECK_THROWS_AS(Tom(2, 2, testing::Ts({"(1)"}, 2)), std::invalid_argument);
}
