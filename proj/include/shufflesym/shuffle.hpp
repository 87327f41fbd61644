#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "shufflesym/permutation.hpp"
#include "shufflesym/rational.hpp"
#include "shufflesym/symmetric_functions.hpp"

namespace shufflesym {

/// Word over the signed alphabet ... < -1 < 0 < 1 < ...; symbols[i] is the
/// letter at position i+1.
using SignedWord = std::vector<int>;

/// Finite law on permutations of a fixed deck size, with exact probabilities.
class ExactDistribution {
 public:
  explicit ExactDistribution(int deck_size) : deck_size_(deck_size) {}

  static ExactDistribution point_mass(const Permutation& pi);
  static ExactDistribution uniform(int deck_size);

  int deck_size() const noexcept { return deck_size_; }
  const std::map<Permutation, Rational>& entries() const noexcept { return entries_; }

  /// Adds weight to π; throws SizeMismatch if π has the wrong size.
  void add(const Permutation& pi, const Rational& weight);
  Rational probability(const Permutation& pi) const;
  Rational total() const;
  /// Image of the law under π ↦ π⁻¹.
  ExactDistribution inverse() const;

  friend bool operator==(const ExactDistribution& a, const ExactDistribution& b);

 private:
  int deck_size_;
  std::map<Permutation, Rational> entries_;  // zero-probability entries are pruned
};

/// Caps for exact enumeration. `max_work` bounds support^n * (max zeros)!.
struct EnumerationLimits {
  int max_deck = 6;
  long long max_work = 1'000'000;

  /// Defaults, overridden by SHUFFLE_SYM_BUDGET ("<work>" or "<work>,<max_deck>").
  static EnumerationLimits from_env();
};

/// Engine for a named sub-stream of a user seed. Distinct streams of the same
/// seed are seeded independently through std::seed_seq.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::uint64_t kWordStream = 1;
inline constexpr std::uint64_t kArrangementStream = 2;
inline constexpr std::uint64_t kPointStream = 3;

/// n i.i.d. letters: i > 0 w.p. α_i, -i w.p. β_i, 0 w.p. γ.
SignedWord sample_word(const ShuffleParams& p, int n, std::uint64_t seed);

/// Deterministic word -> permutation rule given the arrangement of the zero
/// block: negative letters get consecutive values in decreasing position
/// order, positive letters in increasing order, blocks ordered by letter.
/// The j-th zero (left to right) receives base + zero_arrangement(j), where
/// zero_arrangement is a permutation of the number of zeros.
Permutation word_to_permutation(const SignedWord& w, const Permutation& zero_arrangement);

/// As above with a uniformly random zero arrangement drawn from the seed's
/// arrangement stream.
Permutation word_to_permutation(const SignedWord& w, std::uint64_t seed);

/// word_to_permutation(sample_word(p, n, seed), seed): the word and the zero
/// arrangement use independent streams of the one seed.
Permutation sample_shuffle(const ShuffleParams& p, int n, std::uint64_t seed);

/// Exact law of a (α,β,γ) shuffle of n cards by enumerating all support^n
/// words and all arrangements of each zero block.
/// Throws EnumerationTooLarge when n or the work estimate exceeds `limits`.
ExactDistribution exact_shuffle_distribution(const ShuffleParams& p, int n,
                                             const EnumerationLimits& limits = EnumerationLimits::from_env());

/// Law of the deck after a `first` shuffle followed by a `second` one:
/// π1 * π2 with π1 ~ first, π2 ~ second independent. Throws SizeMismatch.
ExactDistribution convolve(const ExactDistribution& first, const ExactDistribution& second);

/// k-fold self convolution (k >= 1).
ExactDistribution convolve_power(const ExactDistribution& d, int k);

/// Inverse description: card c gets label labels[c-1]; cards are dealt into
/// piles by label (face down for labels <= 0, face up for > 0), the 0 pile is
/// replaced by `zero_pile` (its mixed top-to-bottom order), face-up piles are
/// turned over and piles are gathered with smaller labels on top. Returns the
/// resulting deck, top to bottom, as a one-line permutation.
Permutation inverse_shuffle_from_labels(const SignedWord& labels, const std::vector<int>& zero_pile);

/// Random labels and a uniformly mixed 0 pile. Distributed as the inverse of
/// sample_shuffle.
Permutation inverse_shuffle_sample(const ShuffleParams& p, int n, std::uint64_t seed);

/// Exact law of the inverse description, enumerating labels and 0-pile mixes.
ExactDistribution exact_inverse_distribution(const ShuffleParams& p, int n,
                                             const EnumerationLimits& limits = EnumerationLimits::from_env());

}  // namespace shufflesym
