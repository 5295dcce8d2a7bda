#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tropmat/census.hpp"
#include "tropmat/io.hpp"
#include "tropmat/placing.hpp"
#include "tropmat/render.hpp"

using namespace tropmat;
using testing::Ts;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("json round trips") {
  const Tom m = to_tom(testing::staircase());
  CHECK(tom_from_json(Json::parse(tom_to_json(m).dump())) == m);
  CHECK(subdivision_from_json(subdivision_to_json(testing::staircase())) == testing::staircase());

  std::mt19937_64 rng(1);
  const WeightMatrix w = random_generic_weights(2, 3, rng);
  const WeightMatrix back = weights_from_json(weights_to_json(w));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(back(i, j) == w(i, j));
  }
  const PartitionTuple j{{testing::M("14"), testing::M("23")}};
  CHECK(partitions_from_json(partitions_to_json(j), 1, 4, "/J") == j);
}

TEST_CASE("json schema") {
  const Json input = Json::parse(R"({"n":2,"d":3,"maximal_cells":[[[1,2,3],[1]],[[2,3],[1,2]],[[3],[1,2,3]]]})");
  CHECK(subdivision_from_json(input) == testing::staircase());
  const Json w = Json::parse(R"({"n":2,"d":3,"w":[["0","0","0"],["0","1","-1/2"]]})");
  CHECK(weights_from_json(w)(2, 3) == Rational(-1, 2));
  CHECK(weights_from_json(Json::parse(R"({"n":1,"d":2,"w":[[1,"0.5"]]})"))(1, 2) == Rational(1, 2));
}

TEST_CASE("json errors name the field") {
  CHECK_THROWS_WITH_AS(tom_from_json(Json::parse(R"({"n":1,"d":2})")), "/types: missing field", InputError);
  CHECK_THROWS_WITH_AS(tom_from_json(Json::parse(R"({"n":1,"d":2,"types":[[[3]]]})")),
                       doctest::Contains("/types/0/0/0"), InputError);
  CHECK_THROWS_WITH_AS(tom_from_json(Json::parse(R"({"n":0,"d":2,"types":[]})")), doctest::Contains("/n"),
                       InputError);
  CHECK_THROWS_WITH_AS(weights_from_json(Json::parse(R"({"n":1,"d":2,"w":[["0","x"]]})")),
                       doctest::Contains("/w/0/1"), InputError);
  CHECK_THROWS_WITH_AS(subdivision_from_json(Json::parse(R"({"n":1,"d":2,"maximal_cells":[[[]]]})")),
                       doctest::Contains("/maximal_cells/0/0"), InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("svg rendering") {
  const std::string one = render_svg(trivial_subdivision(1, 3));
  CHECK(one.find("version=\"1.1\"") != std::string::npos);
  CHECK(occurrences(one, "<line") == 3);
  CHECK(occurrences(one, "<circle") == 1);

  const std::string stair = render_svg(testing::staircase(), {true, 100.0});
  CHECK(occurrences(stair, "class=\"hyperplane\"") == 2);
  CHECK(occurrences(stair, "<circle") == 3);
  CHECK(occurrences(stair, "<text") == 3);
  CHECK(occurrences(stair, "<line") == 8);
  CHECK(stair == render_svg(testing::staircase(), {true, 100.0}));

  const std::string coarse = render_svg(MixedSubdivision(2, 3, Ts({"(123,123)"}, 3)));
  CHECK(occurrences(coarse, "<circle") == 1);
  CHECK(occurrences(coarse, "<line") == 6);
  CHECK_THROWS(render_svg(trivial_subdivision(1, 2)));
}
