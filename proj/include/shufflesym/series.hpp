#pragma once

#include <climits>
#include <vector>

#include "shufflesym/rational.hpp"
#include "shufflesym/symmetric_functions.hpp"

namespace shufflesym {

/// Power series in a grading variable t, known exactly up to t^precision.
///
/// Series built from a scalar are exact constants (infinite precision); any
/// arithmetic result carries the smaller precision of its operands.
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX;

  TruncatedSeries() : TruncatedSeries(Rational(0)) {}
  TruncatedSeries(int constant) : TruncatedSeries(Rational(constant)) {}  // NOLINT: ring literal
  TruncatedSeries(const Rational& constant);                              // NOLINT: ring literal
  TruncatedSeries(std::vector<Rational> coeffs, int precision);

  /// Zero series known up to t^precision.
  static TruncatedSeries zero(int precision) { return TruncatedSeries({}, precision); }

  int precision() const noexcept { return precision_; }
  /// Coefficient of t^k (0 beyond the stored terms). k must not exceed precision.
  Rational operator[](int k) const;
  /// Coefficients c_0..c_precision (requires finite precision).
  std::vector<Rational> coefficients() const;

  bool is_zero() const;
  /// max_k |c_k|.
  Rational max_abs_coefficient() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(0) - a; }

  /// Coefficientwise equality up to the smaller precision.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void normalize();

  std::vector<Rational> coeffs_;  // trailing zeros trimmed, length <= precision + 1
  int precision_;
};

/// Toeplitz symbol coefficients c_j for j in [-(n-1), n-1].
class LaurentWindow {
 public:
  LaurentWindow(int n, std::vector<TruncatedSeries> entries);

  int size() const noexcept { return n_; }
  const TruncatedSeries& at(int j) const;

 private:
  int n_;
  std::vector<TruncatedSeries> entries_;  // entries_[j + n - 1]
};

/// det of the n x n matrix whose (i, j) entry is c_{j-i}.
TruncatedSeries toeplitz_det(const LaurentWindow& window);

/// c_j = Σ_{m=0}^{D} h̃_{m+j}(p) h_m(x) t^m: the Laurent coefficients of
/// e^{γz} ∏(1+β_r z)/((1 - t x_r/z)(1 - α_r z)).
LaurentWindow gessel_symbol(const ShuffleParams& p, const RationalPointSet& x, int n, int D);

/// Σ_{ℓ(λ) <= n, |λ| <= D} S̃_λ(p) s_λ(x) t^{|λ|}.
TruncatedSeries gessel_lhs(const ShuffleParams& p, const RationalPointSet& x, int n, int D);

/// toeplitz_det(gessel_symbol(p, x, n, D)).
TruncatedSeries gessel_rhs(const ShuffleParams& p, const RationalPointSet& x, int n, int D);

/// Σ_{|λ| <= D} S̃_λ(p) s_λ(x) t^{|λ|}.
TruncatedSeries cauchy_lhs(const ShuffleParams& p, const RationalPointSet& x, int D);
/// Σ_{|λ| <= D} p̃_λ(p) p_λ(x) / z_λ · t^{|λ|}.
TruncatedSeries cauchy_rhs(const ShuffleParams& p, const RationalPointSet& x, int D);
/// cauchy_lhs - cauchy_rhs; identically zero when the identity holds.
TruncatedSeries cauchy_residual(const ShuffleParams& p, const RationalPointSet& x, int D);

struct GapProbability {
  double value = 0;        // e^{-γ⁺} D_n(e^{γ⁺/z} G(z)), G the h̃ generating function of p_minus
  int truncation = 0;      // terms m = 0..truncation of Σ (γ⁺)^m/m! h̃_{j+m}
  double entry_error = 0;  // bound on each truncated matrix entry
  double error_bound = 0;  // rigorous bound on |value - exact|
};

/// Toeplitz determinant e^{-γ⁺} D_n(e^{γ⁺/z} e^{γ⁻z} ∏(1+β⁻_r z)/(1-α⁻_r z)).
///
/// The symbol coefficients are truncated at the first M for which each entry
/// error is below eps/(n·n!) and the propagated determinant error is below
/// eps; everything up to the final scaling is exact rational arithmetic.
/// The determinant equals the probability that the BR(γ⁺, p_minus) partition
/// has at most n rows (equivalently, largest part at most n for
/// p_minus.swapped()). Throws SymbolDivergence if max α⁻ >= 1.
GapProbability br_gap_probability(const Rational& gamma_plus, const ShuffleParams& p_minus, int n,
                                  double eps = 1e-12);

}  // namespace shufflesym
