#include "doctest.h"

#include <map>
#include <set>

#include "../oracles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/rsk.hpp"
#include "shufflesym/shuffle.hpp"

using namespace shufflesym;
using oracle::R;

namespace {

ExactDistribution law(std::initializer_list<std::pair<const char*, Rational>> rows) {
  ExactDistribution d(Permutation::parse(rows.begin()->first).size());
  for (const auto& [text, w] : rows) d.add(Permutation::parse(text), w);
  return d;
}

}  // namespace

TEST_CASE("sample_word edge cases") {
  CHECK(sample_word(ShuffleParams::uniform(), 5, 3) == SignedWord{0, 0, 0, 0, 0});
  CHECK(sample_word(ShuffleParams::gsr(1), 3, 3) == SignedWord{1, 1, 1});
  CHECK(sample_word(ShuffleParams::gsr(2), 20, 9) == sample_word(ShuffleParams::gsr(2), 20, 9));
}

TEST_CASE("sample_word letter frequencies") {
  const int n = 10000;
  const auto w = sample_word(ShuffleParams::gsr(2), n, 2024);
  const auto ones = std::count(w.begin(), w.end(), 1);
  const double sigma = std::sqrt(n * 0.25);
  CHECK(std::abs(static_cast<double>(ones) - n / 2.0) < 3 * sigma);
}

TEST_CASE("word to permutation: worked example") {
  const SignedWord w{-2, 0, 1, 0, 0, 2, -1, -2, -1, 1};
  CHECK(word_to_permutation(w, Permutation{1, 2, 3}) == Permutation::parse("2 5 8 6 7 10 4 1 3 9"));
  std::set<Permutation> outcomes;
  for (const auto& sigma : all_permutations(3)) outcomes.insert(word_to_permutation(w, sigma));
  CHECK(outcomes.size() == 6);
  for (const auto& pi : outcomes) {
    const auto& img = pi.images();
    CHECK(img[0] == 2);
    CHECK(img[2] == 8);
    CHECK(img[5] == 10);
    CHECK(img[6] == 4);
    CHECK(img[7] == 1);
    CHECK(img[8] == 3);
    CHECK(img[9] == 9);
  }
  // Over seeds, the zero block is uniform on its 6 arrangements.
  std::map<Permutation, long> counts;
  const long trials = 60000;
  for (long s = 0; s < trials; ++s) ++counts[word_to_permutation(w, static_cast<std::uint64_t>(s))];
  CHECK(counts.size() == 6);
  ExactDistribution six(10);
  for (const auto& pi : outcomes) six.add(pi, R(1, 6));
  int df = 0;
  const double stat = oracle::chi_square(counts, six, trials, df);
  CHECK(stat < oracle::chi2_critical_1e3(df));
  CHECK_THROWS_AS(word_to_permutation(w, Permutation{1, 2}), SizeMismatch);
}

TEST_CASE("word to permutation: constant words") {
  CHECK(word_to_permutation(SignedWord{2, 2, 2, 2}, 1).is_identity());
  CHECK(word_to_permutation(SignedWord{-1, -1, -1, -1}, 1) == Permutation{4, 3, 2, 1});
}

TEST_CASE("exact distributions: small cases") {
  CHECK(exact_shuffle_distribution(ShuffleParams::gsr(3), 1) == ExactDistribution::point_mass(Permutation{1}));
  CHECK(exact_shuffle_distribution(ShuffleParams::gsr(2), 2) == law({{"1 2", R(3, 4)}, {"2 1", R(1, 4)}}));
  CHECK(exact_shuffle_distribution(ShuffleParams({}, {R(1, 2), R(1, 2)}, 0), 2) ==
        law({{"1 2", R(1, 4)}, {"2 1", R(3, 4)}}));
  for (int n = 0; n <= 4; ++n) {
    CHECK(exact_shuffle_distribution(ShuffleParams::uniform(), n) == ExactDistribution::uniform(n));
  }
  CHECK(exact_shuffle_distribution(ShuffleParams::gsr(1), 4) == ExactDistribution::point_mass(Permutation::identity(4)));
}

TEST_CASE("probability conservation") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 0; n <= 5; ++n) CHECK(exact_shuffle_distribution(p, n).total() == 1);
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(exact_shuffle_distribution(ShuffleParams::gsr(2), 7), EnumerationTooLarge);
  EnumerationLimits tight;
  tight.max_work = 100;
  CHECK_THROWS_AS(exact_shuffle_distribution(ShuffleParams::gsr(3), 5, tight), EnumerationTooLarge);
  CHECK_NOTHROW(exact_shuffle_distribution(ShuffleParams::gsr(3), 4, tight));
}

TEST_CASE("word law equals the cut-and-riffle pile law") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 0; n <= 4; ++n) CHECK(exact_shuffle_distribution(p, n) == oracle::pile_law(oracle::single_piles(p), n));
  }
}

TEST_CASE("inverse description: worked example") {
  // cards 2,9 -> -2; 8 -> -1; 1,4,11 -> 0 (mixed as 4,1,11); 3,5 -> 1; 6,7,10 -> 2
  const SignedWord labels{0, -2, 1, 0, 1, 2, 2, -1, -2, 2, 0};
  const auto pi = inverse_shuffle_from_labels(labels, {4, 1, 11});
  CHECK(pi == Permutation::parse("9 2 8 4 1 11 3 5 6 7 10"));
  CHECK(pi.inverse() == Permutation::parse("5 2 7 4 8 9 10 3 1 11 6"));
  CHECK(inverse_shuffle_sample(ShuffleParams::gsr(1), 6, 4).is_identity());
}

TEST_CASE("inverse description law is the inverse of the forward law") {
  for (const auto& p : oracle::wide_battery()) {
    for (int n = 0; n <= 4; ++n) CHECK(exact_inverse_distribution(p, n) == exact_shuffle_distribution(p, n).inverse());
  }
}

TEST_CASE("convolution") {
  const auto d = exact_shuffle_distribution(ShuffleParams::gsr(2), 3);
  CHECK(convolve(ExactDistribution::point_mass(Permutation::identity(3)), d) == d);
  CHECK_THROWS_AS(convolve(d, ExactDistribution::uniform(2)), SizeMismatch);
  const ShuffleParams half({R(1, 2)}, {}, R(1, 2));
  const auto twice = convolve(exact_shuffle_distribution(half, 3), exact_shuffle_distribution(half, 3));
  CHECK(twice == exact_shuffle_distribution(ShuffleParams({R(1, 4)}, {}, R(3, 4)), 3));
  CHECK(convolve(d, d) == exact_shuffle_distribution(ShuffleParams::gsr(4), 3));
  CHECK(convolve_power(d, 3) == exact_shuffle_distribution(ShuffleParams::gsr(8), 3));
}

TEST_CASE("closure of the (a, 0, 1-a) family under convolution") {
  for (const Rational a : {R(1, 2), R(1, 3), R(3, 4)}) {
    const ShuffleParams p({a}, {}, 1 - a);
    const ShuffleParams sq({a * a}, {}, 1 - a * a);
    for (int n = 1; n <= 5; ++n) {
      const auto d = exact_shuffle_distribution(p, n);
      CHECK(convolve(d, d) == exact_shuffle_distribution(sq, n));
    }
  }
}

TEST_CASE("a (1/2; 1/2; 0) shuffle done twice leaves the family") {
  // h̃_k of the square's shape law match (1+z/4)^2/(1-z/4)^2 for every k, and h̃
  // determines the parameters, so (1/4,1/4; 1/4,1/4; 0) is the only candidate.
  // It shares shape and cycle laws with the square but not the permutation law.
  const ShuffleParams p({R(1, 2)}, {R(1, 2)}, 0);
  const ShuffleParams candidate({R(1, 4), R(1, 4)}, {R(1, 4), R(1, 4)}, 0);
  for (int n = 1; n <= 5; ++n) {
    const auto d = exact_shuffle_distribution(p, n);
    const auto square = convolve(d, d);
    const auto c = exact_shuffle_distribution(candidate, n);
    std::map<Partition, Rational> shape_a, shape_b, cycle_a, cycle_b;
    for (const auto& [pi, w] : square.entries()) {
      shape_a[rsk_shape(pi)] += w;
      cycle_a[cycle_type(pi)] += w;
    }
    for (const auto& [pi, w] : c.entries()) {
      shape_b[rsk_shape(pi)] += w;
      cycle_b[cycle_type(pi)] += w;
    }
    CHECK(shape_a == shape_b);
    CHECK(cycle_a == cycle_b);
    CHECK((square == c) == (n <= 2));
  }
}

TEST_CASE("twofold shuffles follow the ordered pair-pile description") {
  const std::vector<ShuffleParams> ps = {ShuffleParams({R(1, 2)}, {R(1, 2)}, 0),
                                         ShuffleParams({R(1, 3)}, {R(1, 3)}, R(1, 3)),
                                         ShuffleParams({}, {R(1, 2), R(1, 2)}, 0)};
  for (const auto& p : ps) {
    for (int n = 1; n <= 4; ++n) {
      const auto d = exact_shuffle_distribution(p, n);
      CHECK(convolve(d, d) == oracle::pile_law(oracle::two_fold_piles(p), n));
    }
  }
}

TEST_CASE("sampler matches exact law (chi-square at 1e-3)") {
  const std::vector<ShuffleParams> ps = {ShuffleParams::gsr(2), ShuffleParams({R(1, 4)}, {R(1, 4)}, R(1, 2)),
                                         ShuffleParams({}, {R(1, 3), R(2, 3)}, 0)};
  const long trials = 100000;
  std::uint64_t base = 1000;
  for (const auto& p : ps) {
    const auto exact = exact_shuffle_distribution(p, 4);
    std::map<Permutation, long> counts;
    for (long s = 0; s < trials; ++s) ++counts[sample_shuffle(p, 4, base + static_cast<std::uint64_t>(s))];
    base += static_cast<std::uint64_t>(trials);
    int df = 0;
    const double stat = oracle::chi_square(counts, exact, trials, df);
    CHECK(stat < oracle::chi2_critical_1e3(df));
  }
}

TEST_CASE("sampler: degenerate and identity-heavy cases") {
  const long trials = 100000;
  long identity = 0;
  for (long s = 0; s < trials; ++s) identity += sample_shuffle(ShuffleParams::gsr(2), 2, static_cast<std::uint64_t>(s)).is_identity();
  const double sigma = std::sqrt(trials * 0.75 * 0.25);
  CHECK(std::abs(static_cast<double>(identity) - 0.75 * trials) < 3 * sigma);
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(sample_shuffle(ShuffleParams::gsr(1), 7, s).is_identity());

  std::map<Permutation, long> counts;
  for (long s = 0; s < trials; ++s) ++counts[sample_shuffle(ShuffleParams::uniform(), 5, static_cast<std::uint64_t>(s))];
  int df = 0;
  const double uniform_stat = oracle::chi_square(counts, ExactDistribution::uniform(5), trials, df);
  CHECK(uniform_stat < oracle::chi2_critical_1e3(df));
}

TEST_CASE("budget override from the environment") {
  setenv("SHUFFLE_SYM_BUDGET", "50,3", 1);
  const auto limits = EnumerationLimits::from_env();
  CHECK(limits.max_work == 50);
  CHECK(limits.max_deck == 3);
  setenv("SHUFFLE_SYM_BUDGET", "oops", 1);
  CHECK_THROWS_AS(EnumerationLimits::from_env(), InvalidParams);
  unsetenv("SHUFFLE_SYM_BUDGET");
  CHECK(EnumerationLimits::from_env().max_deck == 6);
}
