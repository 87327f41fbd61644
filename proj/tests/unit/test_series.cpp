#include "doctest.h"

#include <cmath>

#include "../oracles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/series.hpp"

using namespace shufflesym;
using oracle::R;

namespace {

TruncatedSeries series(std::vector<Rational> c, int d) { return TruncatedSeries(std::move(c), d); }

std::vector<RationalPointSet> point_sets() {
  return {{}, {1}, {R(1, 3), R(1, 5)}, {R(1, 2), R(-1, 3), 2}};
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
  const auto a = series({1, 2, 3}, 2);
  const auto b = series({1, -1}, 3);
  CHECK((a * b) == series({1, 1, 1}, 2));
  CHECK((a * b).precision() == 2);
  CHECK((a + 1)[0] == 2);
  CHECK((a - a).is_zero());
  CHECK((-a)[2] == -3);
  CHECK(TruncatedSeries(R(2, 3)).precision() == TruncatedSeries::kExact);
  CHECK_THROWS(a[3]);
  CHECK(a.max_abs_coefficient() == 3);
}

TEST_CASE("Toeplitz determinants") {
  const auto c0 = series({1}, 2);
  CHECK(toeplitz_det(LaurentWindow(1, {c0})) == c0);
  const Rational a = R(2, 3), b = R(-5, 7);
  const LaurentWindow w(2, {series({0, b}, 2), series({1}, 2), series({0, a}, 2)});
  CHECK(toeplitz_det(w) == series({1, 0, -a * b}, 2));
  for (int n = 1; n <= 8; ++n) {
    std::vector<TruncatedSeries> entries(static_cast<std::size_t>(2 * n - 1), TruncatedSeries::zero(4));
    entries[static_cast<std::size_t>(n - 1)] = series({1}, 4);
    CHECK(toeplitz_det(LaurentWindow(n, entries)) == series({1}, 4));
  }
  CHECK_THROWS_AS(LaurentWindow(2, {c0}), SizeMismatch);
}

TEST_CASE("Toeplitz determinant matches cofactor expansion") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.integer(1, 4);
    std::vector<TruncatedSeries> entries;
    std::vector<std::vector<Rational>> c;
    for (int j = 0; j < 2 * n - 1; ++j) {
      std::vector<Rational> v;
      for (int k = 0; k <= 3; ++k) v.push_back(R(gen.integer(-3, 3), gen.integer(1, 3)));
      entries.push_back(series(v, 3));
      c.push_back(v);
    }
    const auto det = toeplitz_det(LaurentWindow(n, entries));
    // Coefficient of t^d by expanding the determinant over compositions of d.
    for (int d = 0; d <= 3; ++d) {
      Rational expected = 0;
      for (const auto& sigma : all_permutations(n)) {
        int sign = 1;
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            if (sigma(i) > sigma(j)) sign = -sign;
          }
        }
        std::vector<Rational> prod{1};
        for (int i = 1; i <= n; ++i) {
          const auto& e = c[static_cast<std::size_t>(sigma(i) - i + n - 1)];
          std::vector<Rational> next(prod.size() + e.size() - 1, Rational(0));
          for (std::size_t x = 0; x < prod.size(); ++x) {
            for (std::size_t y = 0; y < e.size(); ++y) next[x + y] += prod[x] * e[y];
          }
          prod = next;
        }
        if (static_cast<std::size_t>(d) < prod.size()) expected += sign * prod[static_cast<std::size_t>(d)];
      }
      CHECK(det[d] == expected);
    }
  }
}

TEST_CASE("Gessel symbol") {
  const auto p = ShuffleParams::gsr(2);
  const auto h = extended_h_sequence(p, 5);
  // At D = 0 only m = 0 survives: c_j = h̃_j, so the window is upper triangular.
  const auto w0 = gessel_symbol(p, {1, 2}, 3, 0);
  CHECK(w0.at(0) == series({1}, 0));
  for (int j = -2; j <= 2; ++j) {
    if (j < 0) CHECK(w0.at(j).is_zero());
    if (j > 0) CHECK(w0.at(j) == series({h[static_cast<std::size_t>(j)]}, 0));
  }
  CHECK(toeplitz_det(w0) == series({1}, 0));
  const auto empty = gessel_symbol(p, {}, 3, 3);
  for (int j = -2; j <= 2; ++j) CHECK(empty.at(j) == series({j >= 0 ? h[static_cast<std::size_t>(j)] : Rational(0)}, 3));

  // x = (1): the symbol is (1 - t/z)^{-1} (1 - z/2)^{-2}, and [z^k](1 - z/2)^{-2} = (k+1)/2^k.
  const auto w = gessel_symbol(p, {1}, 2, 3);
  for (int j = -1; j <= 1; ++j) {
    std::vector<Rational> c;
    for (int m = 0; m <= 3; ++m) c.push_back(m + j >= 0 ? Rational(m + j + 1) / pow(Rational(2), m + j) : Rational(0));
    CHECK(w.at(j) == series(c, 3));
  }
}

TEST_CASE("Gessel sides: small cases") {
  const auto p = ShuffleParams::gsr(2);
  CHECK(gessel_lhs(p, {1, 2}, 2, 0) == series({1}, 0));
  CHECK(gessel_rhs(p, {}, 3, 4) == series({1}, 4));
  const Rational x1 = R(1, 5);
  const ShuffleParams single({1}, {}, 0);
  CHECK(gessel_rhs(single, {x1}, 1, 3) == series({1, x1, x1 * x1, x1 * x1 * x1}, 3));
}

TEST_CASE("Gessel lhs for the uniform shuffle is an exponential") {
  // S̃_λ = f_λ/|λ|! at γ = 1, and Σ_λ f_λ s_λ = p_1^d.
  const RationalPointSet x{R(1, 2), R(1, 3), R(1, 7), 1};
  const auto lhs = gessel_lhs(ShuffleParams::uniform(), x, 4, 4);
  const Rational p1 = R(1, 2) + R(1, 3) + R(1, 7) + 1;
  for (int d = 0; d <= 4; ++d) CHECK(lhs[d] == pow(p1, d) / Rational(factorial(static_cast<unsigned long>(d))));
}

TEST_CASE("Gessel identity on a generated battery") {
  oracle::Gen gen(53);
  for (int trial = 0; trial < 12; ++trial) {
    const auto p = gen.params();
    const auto x = gen.points(3);
    const int n = gen.integer(1, 4);
    const int D = gen.integer(0, 5);
    CHECK(gessel_lhs(p, x, n, D) == gessel_rhs(p, x, n, D));
  }
}

TEST_CASE("Gessel lhs stabilizes once n >= D") {
  const auto x = point_sets()[3];
  for (const auto& p : oracle::battery()) {
    const auto full = cauchy_lhs(p, x, 5);
    for (int n = 5; n <= 7; ++n) CHECK(gessel_lhs(p, x, n, 5) == full);
  }
}

TEST_CASE("Cauchy identity") {
  CHECK(cauchy_residual(ShuffleParams::gsr(2), {1}, 0).is_zero());
  CHECK(cauchy_residual(ShuffleParams::gsr(2), {R(1, 3), R(1, 5)}, 5).is_zero());
  CHECK(cauchy_residual(ShuffleParams({}, {R(1, 2), R(1, 2)}, 0), {R(1, 2)}, 5).is_zero());
  oracle::Gen gen(61);
  for (int trial = 0; trial < 10; ++trial) CHECK(cauchy_residual(gen.params(), gen.points(3), 5).is_zero());
}

TEST_CASE("gap probability examples") {
  // n = 1 under the uniform minus-parameters: e^{-1} Σ 1/(m!)^2 = e^{-1} I_0(2).
  double bessel = 0, term = 1;
  for (int m = 0; m < 40; ++m) {
    bessel += term;
    term /= (m + 1.0) * (m + 1.0);
  }
  const auto g = br_gap_probability(1, ShuffleParams::uniform(), 1);
  CHECK(std::abs(g.value - std::exp(-1.0) * bessel) < 1e-12);
  CHECK(g.error_bound < 1e-12);

  CHECK(std::abs(br_gap_probability(R(1, 1000000), ShuffleParams::uniform(), 1).value - 1) < 1e-5);
  CHECK(std::abs(br_gap_probability(R(1, 2), ShuffleParams::gsr(2), 10).value - 1) < 1e-12);
  CHECK(br_gap_probability(2, ShuffleParams::gsr(2), 0).value == doctest::Approx(std::exp(-2.0)));
  CHECK_THROWS_AS(br_gap_probability(1, ShuffleParams::gsr(1), 2), SymbolDivergence);
}

TEST_CASE("gap probability is a distribution function in n") {
  for (const auto& p : {ShuffleParams::gsr(2), ShuffleParams::uniform(), oracle::battery()[3]}) {
    double prev = 0;
    for (int n = 0; n <= 10; ++n) {
      const double v = br_gap_probability(2, p, n).value;
      CHECK(v >= prev - 1e-12);
      CHECK(v <= 1 + 1e-12);
      prev = v;
    }
  }
}
