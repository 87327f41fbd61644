#pragma once

#include <cstdint>
#include <vector>

#include "shufflesym/partition.hpp"
#include "shufflesym/permutation.hpp"
#include "shufflesym/rational.hpp"
#include "shufflesym/symmetric_functions.hpp"

namespace shufflesym {

struct ContinuumPoint {
  double x = 0;
  double y = 0;  // in [0, 1)
  friend bool operator==(const ContinuumPoint&, const ContinuumPoint&) = default;
};

// Level i > 0 carries intensity γ⁺α_i, level -i carries γ⁺β_i.
struct LinePoint {
  double x = 0;
  int level = 1;
  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

struct PointConfig {
  std::vector<ContinuumPoint> continuum;
  std::vector<LinePoint> lines;

  int size() const noexcept { return static_cast<int>(continuum.size() + lines.size()); }
  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

/// Poissonized configuration with total intensity γ⁺ split by p_minus.
/// Colliding x coordinates are redrawn so the result always has distinct x.
PointConfig sample_br(const Rational& gamma_plus, const ShuffleParams& p_minus, std::uint64_t seed);

/// π(i) = y-rank of the i-th point in x order. Ties on a negative level rank
/// the larger x lower; ties on a positive level rank the larger x higher.
/// Throws DuplicateX.
Permutation points_to_permutation(const PointConfig& c);

Partition br_partition(const PointConfig& c);

inline constexpr int kBruteforcePointCap = 10;

/// Greene-type shape by exhaustive search over unions of increasing
/// subsequences. Throws TooManyPoints above kBruteforcePointCap.
Partition br_partition_bruteforce(const PointConfig& c);

struct ShapeProbability {
  Rational coefficient;  // (γ⁺)^|λ| f_λ S̃_λ / |λ|!, to be multiplied by e^{-γ⁺}
  double value = 0;
};

ShapeProbability br_shape_probability(const Partition& lambda, const Rational& gamma_plus,
                                      const ShuffleParams& p_minus);

}  // namespace shufflesym
