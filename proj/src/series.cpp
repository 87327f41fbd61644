#include "shufflesym/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shufflesym/combinatorics.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/linalg.hpp"

namespace shufflesym {

TruncatedSeries::TruncatedSeries(const Rational& constant)
    : coeffs_{constant}, precision_(kExact) {
  normalize();
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int precision)
    : coeffs_(std::move(coeffs)), precision_(precision) {
  if (precision < 0) throw std::invalid_argument("series precision must be nonnegative");
  normalize();
}

void TruncatedSeries::normalize() {
  if (precision_ != kExact && coeffs_.size() > static_cast<std::size_t>(precision_) + 1) {
    coeffs_.resize(static_cast<std::size_t>(precision_) + 1);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > precision_) throw std::out_of_range("coefficient beyond series precision");
  return static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

std::vector<Rational> TruncatedSeries::coefficients() const {
  if (precision_ == kExact) return coeffs_;
  std::vector<Rational> out = coeffs_;
  out.resize(static_cast<std::size_t>(precision_) + 1, Rational(0));
  return out;
}

bool TruncatedSeries::is_zero() const { return coeffs_.empty(); }

Rational TruncatedSeries::max_abs_coefficient() const {
  Rational m = 0;
  for (const auto& c : coeffs_) m = std::max(m, Rational(abs(c)));
  return m;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  precision_ = std::min(precision_, o.precision_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  precision_ = std::min(precision_, o.precision_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int precision = std::min(a.precision_, b.precision_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    return precision == TruncatedSeries::kExact ? TruncatedSeries(0) : TruncatedSeries::zero(precision);
  }
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (precision != TruncatedSeries::kExact) len = std::min(len, static_cast<std::size_t>(precision) + 1);
  std::vector<Rational> c(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  TruncatedSeries out(Rational(0));
  out.coeffs_ = std::move(c);
  out.precision_ = precision;
  out.normalize();
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int precision = std::min(a.precision_, b.precision_);
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (precision != TruncatedSeries::kExact && k > static_cast<std::size_t>(precision)) break;
    const Rational ca = k < a.coeffs_.size() ? a.coeffs_[k] : Rational(0);
    const Rational cb = k < b.coeffs_.size() ? b.coeffs_[k] : Rational(0);
    if (ca != cb) return false;
  }
  return true;
}

LaurentWindow::LaurentWindow(int n, std::vector<TruncatedSeries> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0) throw std::invalid_argument("window size must be nonnegative");
  const std::size_t expected = n == 0 ? 0 : static_cast<std::size_t>(2 * n - 1);
  if (entries_.size() != expected) throw SizeMismatch("Laurent window needs 2n-1 entries");
}

const TruncatedSeries& LaurentWindow::at(int j) const {
  if (j <= -n_ || j >= n_) throw std::out_of_range("Laurent window index out of range");
  return entries_[static_cast<std::size_t>(j + n_ - 1)];
}

TruncatedSeries toeplitz_det(const LaurentWindow& window) {
  const int n = window.size();
  Matrix<TruncatedSeries> m(static_cast<std::size_t>(n), std::vector<TruncatedSeries>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = window.at(j - i);
  }
  return determinant_division_free(m);
}

LaurentWindow gessel_symbol(const ShuffleParams& p, const RationalPointSet& x, int n, int D) {
  if (D < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  const auto ht = extended_h_sequence(p, D + std::max(n - 1, 0));
  const auto hx = complete_homogeneous_at(x, D);
  std::vector<TruncatedSeries> entries;
  for (int j = -(n - 1); j <= n - 1; ++j) {
    std::vector<Rational> c(static_cast<std::size_t>(D) + 1, Rational(0));
    for (int m = std::max(0, -j); m <= D; ++m) {
      c[static_cast<std::size_t>(m)] = ht[static_cast<std::size_t>(m + j)] * hx[static_cast<std::size_t>(m)];
    }
    entries.emplace_back(std::move(c), D);
  }
  return LaurentWindow(n, std::move(entries));
}

TruncatedSeries gessel_lhs(const ShuffleParams& p, const RationalPointSet& x, int n, int D) {
  std::vector<Rational> c(static_cast<std::size_t>(D) + 1, Rational(0));
  for (const auto& lambda : partitions_up_to(D)) {
    if (lambda.length() > n) continue;
    c[static_cast<std::size_t>(lambda.size())] += extended_schur(p, lambda) * schur_at(lambda, x);
  }
  return TruncatedSeries(std::move(c), D);
}

TruncatedSeries gessel_rhs(const ShuffleParams& p, const RationalPointSet& x, int n, int D) {
  return toeplitz_det(gessel_symbol(p, x, n, D));
}

TruncatedSeries cauchy_lhs(const ShuffleParams& p, const RationalPointSet& x, int D) {
  return gessel_lhs(p, x, std::max(D, 0), D);
}

TruncatedSeries cauchy_rhs(const ShuffleParams& p, const RationalPointSet& x, int D) {
  if (D < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(D) + 1, Rational(0));
  for (const auto& lambda : partitions_up_to(D)) {
    c[static_cast<std::size_t>(lambda.size())] +=
        extended_power_sum(p, lambda) * power_sum_at(lambda, x) / Rational(z_lambda(lambda));
  }
  return TruncatedSeries(std::move(c), D);
}

TruncatedSeries cauchy_residual(const ShuffleParams& p, const RationalPointSet& x, int D) {
  return cauchy_lhs(p, x, D) - cauchy_rhs(p, x, D);
}

GapProbability br_gap_probability(const Rational& gamma_plus, const ShuffleParams& p_minus, int n,
                                  double eps) {
  if (gamma_plus <= 0) throw std::invalid_argument("gamma_plus must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (p_minus.max_alpha() >= 1) {
    throw SymbolDivergence("max alpha = 1: the h̃ generating function diverges at z = 1");
  }
  GapProbability out;
  const double gp = gamma_plus.get_d();
  if (n == 0) {
    out.value = std::exp(-gp);
    return out;
  }

  // h̃_k <= G(1) since h̃_k >= 0 and G converges at 1.
  double g1 = std::exp(p_minus.gamma().get_d());
  for (const auto& b : p_minus.beta()) g1 *= 1 + b.get_d();
  for (const auto& a : p_minus.alpha()) g1 /= 1 - a.get_d();
  const double entry_cap = std::exp(gp) * g1;  // every exact symbol coefficient is <= this
  const double n_fact = std::tgamma(n + 1.0);

  // Smallest M with tail bound G(1) (γ⁺)^{M+1}/(M+1)! / (1 - γ⁺/(M+2)) small enough.
  int M = 0;
  double term = gp;  // (γ⁺)^{M+1}/(M+1)!
  while (true) {
    double delta = std::numeric_limits<double>::infinity();
    if (M + 2 > gp) delta = g1 * term / (1 - gp / (M + 2));
    const double det_error =
        std::exp(-gp) * n_fact * (std::pow(entry_cap + delta, n) - std::pow(entry_cap, n));
    if (delta < eps / (n * n_fact) && det_error < eps) {
      out.entry_error = delta;
      out.error_bound = det_error;
      break;
    }
    ++M;
    term *= gp / (M + 1);
    if (M > 100000) throw std::runtime_error("br_gap_probability: truncation did not converge");
  }
  out.truncation = M;

  const auto h = extended_h_sequence(p_minus, n - 1 + M);
  std::vector<Rational> c(static_cast<std::size_t>(2 * n - 1), Rational(0));
  Rational weight = 1;  // (γ⁺)^m / m!
  for (int m = 0; m <= M; ++m) {
    for (int j = -(n - 1); j <= n - 1; ++j) {
      if (j + m >= 0) c[static_cast<std::size_t>(j + n - 1)] += weight * h[static_cast<std::size_t>(j + m)];
    }
    weight *= gamma_plus / (m + 1);
  }
  Matrix<Rational> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - i + n - 1)];
  }
  out.value = std::exp(-gp) * determinant_bareiss(std::move(a)).get_d();
  return out;
}

}  // namespace shufflesym
