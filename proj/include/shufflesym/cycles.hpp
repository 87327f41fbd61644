#pragma once

#include <map>
#include <vector>

#include "shufflesym/partition.hpp"
#include "shufflesym/rational.hpp"
#include "shufflesym/shuffle.hpp"
#include "shufflesym/symmetric_functions.hpp"

namespace shufflesym {

/// Exact law of the cycle type of a random permutation of n.
class CycleTypeDistribution {
 public:
  explicit CycleTypeDistribution(int deck_size) : deck_size_(deck_size) {}

  int deck_size() const noexcept { return deck_size_; }
  const std::map<Partition, Rational>& entries() const noexcept { return entries_; }

  void add(const Partition& lambda, const Rational& weight);
  Rational probability(const Partition& lambda) const;
  Rational total() const;

  /// P(N_i = c) for c = 0..n/i, N_i the number of i-cycles.
  std::vector<Rational> cycle_count_marginal(int i) const;
  /// E[N_i].
  Rational expected_cycle_count(int i) const;

  friend bool operator==(const CycleTypeDistribution&, const CycleTypeDistribution&) = default;

 private:
  int deck_size_;
  std::map<Partition, Rational> entries_;  // zero entries pruned
};

inline constexpr int kDefaultCycleCap = 30;

/// Pushforward of an exact permutation law under cycle_type.
CycleTypeDistribution cycle_type_pushforward(const ExactDistribution& d);

/// Cycle-type law of a (α,β,γ) shuffle of n cards from the cycle index
/// ∏_{i,j} exp((u^i x_i)^j/(ij) Σ_{d|i} μ(d) p̃_{jd}^{i/d}): the factor for
/// i-cycles is a series in u^i x_i, so P(λ) = ∏_i [y^{m_i(λ)}] F_i(y).
/// Throws CapExceeded for n > cap.
CycleTypeDistribution cycle_type_distribution(const ShuffleParams& p, int n, int cap = kDefaultCycleCap);

/// Σ_{j=1}^n p̃_j: the expected number of fixed points.
Rational expected_fixed_points(const ShuffleParams& p, int n);

/// C(n,2) (Σα_i² + Σβ_i²)^k: separation distance bound after k shuffles.
Rational separation_bound(const ShuffleParams& p, int k, int n);

struct Distances {
  Rational separation;       // max_π (1 - n! P(π))
  Rational total_variation;  // ½ Σ_π |P(π) - 1/n!|
};

/// Exact distances from uniform over all n! permutations. Throws
/// CapExceeded if the deck exceeds max_deck.
Distances exact_distances(const ExactDistribution& d, int max_deck = 8);

/// (1/i) Σ_{d|i} μ(d) q^{i/d}: number of geometric factors for i-cycles.
Integer necklace_count(int i, long q);

struct LimitCyclePmf {
  int i = 0;
  long q = 0;
  Rational gamma;
  Rational u;
  double poisson_mean = 0;
  double geometric_parameter = 0;  // x in P(G = c) = (1 - x) x^c
  Integer geometric_count = 0;
  std::vector<double> pmf;  // P(N_i = c), c = 0..cap
  double tail_mass = 0;     // 1 - Σ pmf
};

/// Law of N_i for α_1..α_q = (1-γ)/q, β = 0: Poisson(u^i(1-(1-γ)^i)/i)
/// convolved with necklace_count(i, q) geometrics of parameter
/// (u(1-γ)/q)^i on {0,1,...}. u < 1 is the deck size ~ (1-u)u^n mixture;
/// u = 1 is the n -> ∞ limit. Throws BoundaryParameter when the geometric
/// parameter equals 1 (q = 1, γ = 0, u = 1).
LimitCyclePmf limit_cycle_pmf(int i, long q, const Rational& gamma, const Rational& u, int cap);

/// Cycle-type law for α_1..α_q = (1-γ)/q, β = 0, from the simplified product
/// ∏_i (1 - x_i (u(1-γ)/q)^i)^{-necklace_count(i,q)} exp(u^i x_i (1-(1-γ)^i)/i).
/// Independent of cycle_type_distribution's general extraction.
CycleTypeDistribution mixed_riffle_cycle_index(long q, const Rational& gamma, int n,
                                               int cap = kDefaultCycleCap);

}  // namespace shufflesym
