#include "doctest.h"

#include <cmath>

#include "../oracles.hpp"
#include "shufflesym/cycles.hpp"
#include "shufflesym/errors.hpp"

using namespace shufflesym;
using oracle::R;

TEST_CASE("cycle index examples") {
  const auto one = cycle_type_distribution(ShuffleParams::gsr(3), 1);
  CHECK(one.probability(Partition{1}) == 1);
  const auto gsr2 = cycle_type_distribution(ShuffleParams::gsr(2), 2);
  CHECK(gsr2.probability(Partition{1, 1}) == R(3, 4));
  CHECK(gsr2.probability(Partition{2}) == R(1, 4));
  const auto reversal = cycle_type_distribution(ShuffleParams({}, {1}, 0), 3);
  CHECK(reversal.probability(Partition{2, 1}) == 1);
  CHECK(reversal == cycle_type_pushforward(exact_shuffle_distribution(ShuffleParams({}, {1}, 0), 3)));
  CHECK_THROWS_AS(cycle_type_distribution(ShuffleParams::gsr(2), 31), CapExceeded);
}

TEST_CASE("cycle index equals the enumeration pushforward") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(cycle_type_distribution(p, n) == cycle_type_pushforward(exact_shuffle_distribution(p, n)));
    }
  }
  oracle::Gen gen(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = gen.params();
    CHECK(cycle_type_distribution(p, 4) == cycle_type_pushforward(exact_shuffle_distribution(p, 4)));
  }
}

TEST_CASE("reversal duality") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 1; n <= 5; ++n) {
      CycleTypeDistribution reversed(n);
      const auto dist = exact_shuffle_distribution(p, n);
      for (const auto& [pi, w] : dist.entries()) reversed.add(cycle_type(reverse_deck(pi)), w);
      CHECK(reversed == cycle_type_distribution(p.swapped(), n));
    }
  }
}

TEST_CASE("expected fixed points") {
  CHECK(expected_fixed_points(ShuffleParams::uniform(), 7) == 1);
  CHECK(expected_fixed_points(ShuffleParams::gsr(2), 2) == R(3, 2));
  CHECK(expected_fixed_points(ShuffleParams({R(1, 2)}, {}, R(1, 2)), 2) == R(5, 4));
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 1; n <= 12; ++n) CHECK(cycle_type_distribution(p, n).expected_cycle_count(1) == expected_fixed_points(p, n));
  }
}

TEST_CASE("separation bound") {
  CHECK(separation_bound(ShuffleParams::gsr(2), 19, 52) == R(1326, 1L << 19));
  CHECK(std::abs(separation_bound(ShuffleParams::gsr(2), 19, 52).get_d() - 0.00253) < 5e-6);
  CHECK(separation_bound(ShuffleParams::uniform(), 3, 10) == 0);
  CHECK(separation_bound(ShuffleParams({R(9, 10)}, {}, R(1, 10)), 1, 10) == 45 * R(81, 100));
}

TEST_CASE("exact distances") {
  const auto u = exact_distances(ExactDistribution::uniform(4));
  CHECK(u.separation == 0);
  CHECK(u.total_variation == 0);
  const auto id = exact_distances(ExactDistribution::point_mass(Permutation::identity(2)));
  CHECK(id.separation == 1);
  CHECK(id.total_variation == R(1, 2));
  const auto d = exact_distances(exact_shuffle_distribution(ShuffleParams::gsr(2), 3));
  // GSR-2 on 3 cards: identity 1/2, four one-rising-sequence perms 1/8, 3 2 1 impossible.
  CHECK(d.separation == 1);
  CHECK(d.total_variation == R(1, 3));
  CHECK(d.separation <= separation_bound(ShuffleParams::gsr(2), 1, 3));
  CHECK_THROWS_AS(exact_distances(ExactDistribution::uniform(3), 2), CapExceeded);
}

TEST_CASE("separation bound dominates exact separation") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 2; n <= 4; ++n) {
      const auto d = exact_shuffle_distribution(p, n);
      auto dk = d;
      for (int k = 1; k <= 6; ++k) {
        if (k > 1) dk = convolve(dk, d);
        CHECK(exact_distances(dk).separation <= separation_bound(p, k, n));
        CHECK(exact_distances(dk).total_variation <= exact_distances(dk).separation);
      }
    }
  }
}

TEST_CASE("necklace counts") {
  CHECK(necklace_count(1, 1) == 1);
  CHECK(necklace_count(2, 1) == 0);
  CHECK(necklace_count(1, 2) == 2);
  CHECK(necklace_count(2, 2) == 1);
  CHECK(necklace_count(6, 2) == 9);
  CHECK(necklace_count(4, 3) == 18);
}

TEST_CASE("mixed riffle cycle index") {
  const auto u3 = mixed_riffle_cycle_index(1, 1, 3);
  CHECK(u3.probability(Partition{1, 1, 1}) == R(1, 6));
  CHECK(u3.probability(Partition{2, 1}) == R(1, 2));
  CHECK(u3.probability(Partition{3}) == R(1, 3));
  CHECK(mixed_riffle_cycle_index(1, R(1, 2), 2) == cycle_type_distribution(ShuffleParams({R(1, 2)}, {}, R(1, 2)), 2));
  const auto g = mixed_riffle_cycle_index(2, 0, 2);
  CHECK(g.probability(Partition{1, 1}) == R(3, 4));
  CHECK(g.probability(Partition{2}) == R(1, 4));
  for (long q = 1; q <= 3; ++q) {
    for (const Rational gamma : {R(0), R(1, 4), R(1, 2), R(1)}) {
      if (q == 1 && gamma == 0) continue;
      std::vector<Rational> alpha(static_cast<std::size_t>(q), (1 - gamma) / q);
      const ShuffleParams p(alpha, {}, gamma);
      for (int n = 1; n <= 8; ++n) CHECK(mixed_riffle_cycle_index(q, gamma, n) == cycle_type_distribution(p, n));
    }
  }
}

TEST_CASE("balanced signed parameters: closed-form cycle law") {
  for (long q = 1; q <= 3; ++q) {
    const auto p = oracle::balanced_signed_params(q);
    for (int n = 1; n <= 8; ++n) CHECK(cycle_type_distribution(p, n) == oracle::balanced_signed_cycle_law(q, n));
    for (int n = 1; n <= 4; ++n) {
      CHECK(oracle::balanced_signed_cycle_law(q, n) == cycle_type_pushforward(exact_shuffle_distribution(p, n)));
    }
  }
}

TEST_CASE("cycle laws are normalized with consistent marginals") {
  const auto d = cycle_type_distribution(ShuffleParams({R(1, 2)}, {}, R(1, 2)), 20);
  CHECK(d.total() == 1);
  for (int i = 1; i <= 4; ++i) {
    const auto m = d.cycle_count_marginal(i);
    Rational total = 0, mean = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
      total += m[c];
      mean += static_cast<long>(c) * m[c];
    }
    CHECK(total == 1);
    CHECK(mean == d.expected_cycle_count(i));
  }
}

TEST_CASE("limit cycle pmf") {
  const auto pois = limit_cycle_pmf(2, 1, 1, 1, 10);
  CHECK(pois.geometric_parameter == 0);
  double f = 1;
  for (int c = 0; c <= 10; ++c) {
    if (c > 0) f *= c;
    CHECK(pois.pmf[static_cast<std::size_t>(c)] == doctest::Approx(std::exp(-0.5) * std::pow(0.5, c) / f).epsilon(1e-12));
  }
  CHECK_THROWS_AS(limit_cycle_pmf(1, 1, 0, 1, 5), BoundaryParameter);
  const auto half = limit_cycle_pmf(1, 1, R(1, 2), 1, 30);
  CHECK(half.pmf[0] == doctest::Approx(0.5 * std::exp(-0.5)));
  double total = 0;
  for (double v : half.pmf) {
    CHECK(v >= 0);
    total += v;
  }
  CHECK(total + half.tail_mass == doctest::Approx(1.0));
  CHECK(half.tail_mass < 1e-8);
}

TEST_CASE("limit law is approached as the deck grows") {
  const ShuffleParams p({R(1, 2)}, {}, R(1, 2));
  for (int i = 1; i <= 3; ++i) {
    const auto limit = limit_cycle_pmf(i, 1, R(1, 2), 1, 30);
    double prev = 2;
    for (int n : {10, 20, 30}) {
      const auto m = cycle_type_distribution(p, n).cycle_count_marginal(i);
      double tv = 0;
      for (std::size_t c = 0; c < limit.pmf.size(); ++c) {
        const double exact = c < m.size() ? m[c].get_d() : 0.0;
        tv += std::abs(exact - limit.pmf[c]);
      }
      tv = (tv + limit.tail_mass) / 2;
      CHECK(tv < prev);
      prev = tv;
    }
    CHECK(prev < 0.05);
  }
}
