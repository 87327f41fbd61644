#include "doctest.h"

#include "../oracles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/symmetric_functions.hpp"

using namespace shufflesym;
using oracle::R;

TEST_CASE("params validation") {
  CHECK_THROWS_AS(ShuffleParams({R(1, 2)}, {}, R(1, 3)), InvalidParams);
  CHECK_THROWS_AS(ShuffleParams({R(3, 2)}, {R(-1, 2)}, 0), InvalidParams);
  const ShuffleParams p({R(1, 2), 0}, {R(1, 2), 0, 0}, 0);
  CHECK(p.alpha().size() == 1);
  CHECK(p.beta().size() == 1);
  CHECK(p.swapped() == ShuffleParams({R(1, 2)}, {R(1, 2)}, 0));
  CHECK(ShuffleParams::gsr(2).collision_probability() == R(1, 2));
  CHECK(p.weight(-1) == R(1, 2));
  CHECK(p.weight(0) == 0);
  CHECK(p.weight(2) == 0);
}

TEST_CASE("extended h sequence") {
  const auto e = extended_h_sequence(ShuffleParams::uniform(), 3);
  CHECK(e == std::vector<Rational>{1, 1, R(1, 2), R(1, 6)});
  CHECK(extended_h_sequence(ShuffleParams::gsr(2), 2)[2] == R(3, 4));
  oracle::Gen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = gen.params();
    const auto h = extended_h_sequence(p, 6);
    CHECK(h[0] == 1);
    for (int k = 0; k <= 6; ++k) {
      CHECK(h[static_cast<std::size_t>(k)] == oracle::extended_h_bruteforce(p, k));
      CHECK(h[static_cast<std::size_t>(k)] >= 0);
    }
  }
}

TEST_CASE("extended schur examples") {
  const auto gsr2 = ShuffleParams::gsr(2);
  CHECK(extended_schur(gsr2, Partition{1}) == 1);
  CHECK(extended_schur(gsr2, Partition{1, 1}) == R(1, 4));
  CHECK(extended_schur(gsr2, Partition()) == 1);
  CHECK(extended_schur(oracle::battery()[3], Partition{1}) == 1);
}

TEST_CASE("extended power sums") {
  CHECK(extended_power_sum(ShuffleParams::gsr(3), 1) == 1);
  CHECK(extended_power_sum(ShuffleParams({}, {R(1, 2), R(1, 2)}, 0), 2) == R(-1, 2));
  CHECK(extended_power_sum(ShuffleParams({R(1, 2)}, {R(1, 4)}, R(1, 4)), 3) == R(9, 64));
  CHECK(extended_power_sum(ShuffleParams::gsr(2), Partition{2, 1}) == R(1, 2));
}

TEST_CASE("classical evaluations") {
  const std::vector<Rational> ab = {R(2, 3), R(-1, 5)};
  CHECK(schur_at(Partition{1}, ab) == R(2, 3) + R(-1, 5));
  CHECK(schur_at(Partition{1, 1}, {1, 1}) == 1);
  CHECK(schur_at(Partition{2, 1}, {1, 1, 1}) == 8);
  CHECK(schur_at(Partition{1, 1, 1}, {1, 1}) == 0);
  CHECK(power_sum_at(Partition{1}, ab) == R(7, 15));
  CHECK(power_sum_at(Partition{2, 2}, {1, -1}) == 4);
  CHECK(power_sum_at(Partition{3}, {R(1, 2), R(1, 2)}) == R(1, 4));
  CHECK(principal_specialization(Partition{4}, 1, 1) == 1);
  CHECK(principal_specialization(Partition{1}, 2, 2) == R(3, 2));
  CHECK(principal_specialization(Partition{1, 1}, 2, 2) == R(1, 2));
}

TEST_CASE("schur_at agrees with semistandard tableau sums") {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto lambda = gen.partition(6);
    const auto x = gen.points(3);
    CHECK(schur_at(lambda, x) == oracle::ssyt_schur(lambda, x));
  }
}

TEST_CASE("extended schur is nonnegative and normalized") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 0; n <= 8; ++n) {
      Rational total = 0;
      for (const auto& lambda : partitions_of(n)) {
        const Rational s = extended_schur(p, lambda);
        CHECK(s >= 0);
        total += Rational(hook_length_count(lambda)) * s;
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("alpha-only parameters specialize to classical Schur values") {
  const std::vector<std::vector<Rational>> alphas = {{1}, {R(1, 2), R(1, 2)}, {R(1, 6), R(1, 3), R(1, 2)}};
  for (const auto& a : alphas) {
    const ShuffleParams p(a, {}, 0);
    for (const auto& lambda : partitions_up_to(6)) CHECK(extended_schur(p, lambda) == oracle::ssyt_schur(lambda, a));
  }
}

TEST_CASE("Newton relation between h and p") {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = gen.params();
    const auto h = extended_h_sequence(p, 12);
    for (int k = 1; k <= 12; ++k) {
      Rational rhs = 0;
      for (int j = 1; j <= k; ++j) rhs += extended_power_sum(p, j) * h[static_cast<std::size_t>(k - j)];
      CHECK(k * h[static_cast<std::size_t>(k)] == rhs);
    }
  }
}

TEST_CASE("Jacobi-Trudi by elimination matches cofactor expansion") {
  oracle::Gen gen(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = gen.params();
    const auto lambda = gen.partition(7);
    const auto h = extended_h_sequence(p, 14);
    const int l = lambda.length();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        const int k = lambda[i] - i + j;
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k < 0 ? Rational(0) : h[static_cast<std::size_t>(k)];
      }
    }
    CHECK(extended_schur(p, lambda) == oracle::laplace_det(m));
  }
}
