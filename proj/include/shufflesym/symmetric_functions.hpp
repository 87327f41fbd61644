#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shufflesym/partition.hpp"
#include "shufflesym/rational.hpp"

namespace shufflesym {

/// Parameters (α, β, γ) of a shuffle: symbol i > 0 has weight alpha[i-1],
/// symbol -i has weight beta[i-1], symbol 0 has weight gamma.
///
/// Invariant: all weights are >= 0 and gamma + Σα + Σβ = 1 exactly. Trailing
/// zero weights are trimmed. Violations throw InvalidParams; nothing is
/// renormalized.
class ShuffleParams {
 public:
  ShuffleParams(std::vector<Rational> alpha, std::vector<Rational> beta, Rational gamma);

  /// Gilbert-Shannon-Reeds k-shuffle: α_i = 1/k for i = 1..k.
  static ShuffleParams gsr(int k);
  /// γ = 1: the uniform shuffle.
  static ShuffleParams uniform();

  const std::vector<Rational>& alpha() const noexcept { return alpha_; }
  const std::vector<Rational>& beta() const noexcept { return beta_; }
  const Rational& gamma() const noexcept { return gamma_; }

  /// (β, α, γ): the parameters of a shuffle followed by deck reversal.
  ShuffleParams swapped() const;

  /// Weight of a signed symbol (0 outside the support).
  Rational weight(int symbol) const;
  /// Symbols with positive weight, in increasing symbol order.
  std::vector<std::pair<int, Rational>> support() const;

  /// Σα_i² + Σβ_i², the per-pair collision probability.
  Rational collision_probability() const;
  Rational max_alpha() const;

  std::string describe() const;

  friend bool operator==(const ShuffleParams&, const ShuffleParams&) = default;

 private:
  std::vector<Rational> alpha_;
  std::vector<Rational> beta_;
  Rational gamma_;
};

using RationalPointSet = std::vector<Rational>;

/// [h̃_0, ..., h̃_kmax]: coefficients of e^{γz} ∏(1+β_i z)/(1-α_i z).
std::vector<Rational> extended_h_sequence(const ShuffleParams& p, int kmax);

/// det(h_{λ_i - i + j}) for an arbitrary sequence h (h_k = 0 for k < 0 or
/// beyond the sequence). Shared by the extended and classical Schur routines.
Rational jacobi_trudi(const std::vector<Rational>& h, const Partition& lambda);

/// S̃_λ(α, β, γ) = det(h̃_{λ_i - i + j}).
Rational extended_schur(const ShuffleParams& p, const Partition& lambda);

/// p̃_1 = 1; p̃_n = Σα_i^n + (-1)^{n+1} Σβ_i^n for n >= 2.
Rational extended_power_sum(const ShuffleParams& p, int n);

/// p̃_λ = ∏ p̃_{λ_i}.
Rational extended_power_sum(const ShuffleParams& p, const Partition& lambda);

/// [h_0(x), ..., h_kmax(x)] for the classical complete homogeneous functions.
std::vector<Rational> complete_homogeneous_at(const RationalPointSet& x, int kmax);

/// Classical Schur polynomial s_λ(x_1..x_m) by Jacobi-Trudi.
Rational schur_at(const Partition& lambda, const RationalPointSet& x);

/// p_λ(x) = ∏_i Σ_j x_j^{λ_i}.
Rational power_sum_at(const Partition& lambda, const RationalPointSet& x);

/// s_λ(1, 1/base, ..., 1/base^{k-1}).
Rational principal_specialization(const Partition& lambda, const Rational& base, int k);

}  // namespace shufflesym
