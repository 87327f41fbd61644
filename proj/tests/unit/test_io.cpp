#include "doctest.h"

#include <sstream>

#include "../oracles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/io.hpp"

using namespace shufflesym;
using oracle::R;

TEST_CASE("params JSON round trip") {
  for (const auto& p : oracle::wide_battery()) CHECK(io::params_from_json(io::params_to_json(p)) == p);
  CHECK(io::params_to_json(ShuffleParams::gsr(2)) == R"({"alpha":["1/2","1/2"],"beta":[],"gamma":"0"})");
  CHECK(io::load_params(R"({"alpha": ["1/2"], "gamma": "1/2"})") == ShuffleParams({R(1, 2)}, {}, R(1, 2)));
  CHECK_THROWS_AS(io::params_from_json("{"), ParseError);
  CHECK_THROWS_AS(io::params_from_json(R"({"alpha": ["x"]})"), ParseError);
  CHECK_THROWS_AS(io::params_from_json(R"({"alpha": ["1/3"]})"), InvalidParams);
  CHECK_THROWS_AS(io::load_params("/nonexistent/params.json"), ParseError);
}

TEST_CASE("distribution CSV round trip") {
  for (const auto& p : oracle::battery()) {
    const auto d = exact_shuffle_distribution(p, 3);
    std::stringstream s;
    io::write_distribution_csv(s, d);
    CHECK(io::read_distribution_csv(s) == d);
  }
  std::stringstream bad("permutation,probability\n1 2,1/2\n1 2 3,1/2\n");
  CHECK_THROWS_AS(io::read_distribution_csv(bad), ParseError);
  std::stringstream header("perm,prob\n");
  CHECK_THROWS_AS(io::read_distribution_csv(header), ParseError);
}

TEST_CASE("cycle CSV round trip") {
  const auto d = cycle_type_distribution(ShuffleParams::gsr(3), 6);
  std::stringstream s;
  io::write_cycle_csv(s, d);
  CHECK(s.str().rfind("partition,probability\n", 0) == 0);
  CHECK(io::read_cycle_csv(s) == d);
}

TEST_CASE("tableau JSON round trip") {
  const Tableau t{{{-2, 1, 1}, {-2, 2}, {-1}, {1}}};
  CHECK(io::tableau_to_json(t) == "[[-2,1,1],[-2,2],[-1],[1]]");
  CHECK(io::tableau_from_json(io::tableau_to_json(t)) == t);
  CHECK_THROWS_AS(io::tableau_from_json(R"([["a"]])"), ParseError);
}

TEST_CASE("point configuration JSON round trip") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto c = sample_br(3, oracle::battery()[3], s);
    CHECK(io::points_from_json(io::points_to_json(c)) == c);
  }
  CHECK_THROWS_AS(io::points_from_json(R"({"lines": [[0.5]]})"), ParseError);
}

TEST_CASE("shape count CSV round trip") {
  std::map<Partition, long long> counts{{Partition(), 4}, {Partition{2, 1}, 7}, {Partition{3}, 1}};
  std::stringstream s;
  io::write_shape_counts_csv(s, counts);
  CHECK(io::read_shape_counts_csv(s) == counts);
}
