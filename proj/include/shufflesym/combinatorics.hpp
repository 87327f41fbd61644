#pragma once

#include <vector>

#include "shufflesym/partition.hpp"
#include "shufflesym/permutation.hpp"
#include "shufflesym/rational.hpp"

namespace shufflesym {

/// Number of standard Young tableaux of shape λ, by the hook length formula.
Integer hook_length_count(const Partition& lambda);

/// z_λ = ∏ i^{m_i} m_i!, the centralizer order of a permutation of cycle type λ.
Integer z_lambda(const Partition& lambda);

/// Number-theoretic Möbius function. Requires d >= 1.
int moebius(long d);

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

/// Cycle lengths of π as a partition of n.
Partition cycle_type(const Permutation& pi);

struct DescentStats {
  std::vector<int> descent_set;  // 1-based positions i with π(i) > π(i+1)
  int descents = 0;
  int major_index = 0;

  friend bool operator==(const DescentStats&, const DescentStats&) = default;
};

DescentStats descent_stats(const Permutation& pi);

/// Gaussian binomial [n choose m]_q evaluated at a rational q.
///
/// Uses the q-Pascal recurrence, which needs no division and so is valid at
/// q = 1 (ordinary binomial) and q = -1. Returns 0 when m < 0 or m > n.
/// Throws DegenerateEvaluation for q = 0 or n < 0.
Rational q_binomial(long n, long m, const Rational& q);

/// Reverses the deck: result(i) = n + 1 - π(i), i.e. w0 * π.
Permutation reverse_deck(const Permutation& pi);

}  // namespace shufflesym
