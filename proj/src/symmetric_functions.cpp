#include "shufflesym/symmetric_functions.hpp"

#include <algorithm>
#include <stdexcept>

#include "shufflesym/errors.hpp"
#include "shufflesym/linalg.hpp"

namespace shufflesym {

namespace {

void trim_trailing_zeros(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

ShuffleParams::ShuffleParams(std::vector<Rational> alpha, std::vector<Rational> beta,
                             Rational gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  // Two-argument mpq construction does not reduce; equality needs canonical form.
  gamma_.canonicalize();
  for (auto& a : alpha_) a.canonicalize();
  for (auto& b : beta_) b.canonicalize();
  Rational total = gamma_;
  if (gamma_ < 0) throw InvalidParams("gamma must be nonnegative");
  for (const auto& a : alpha_) {
    if (a < 0) throw InvalidParams("alpha weights must be nonnegative");
    total += a;
  }
  for (const auto& b : beta_) {
    if (b < 0) throw InvalidParams("beta weights must be nonnegative");
    total += b;
  }
  if (total != 1) {
    throw InvalidParams("weights must sum to 1 (got " + to_string(total) + ")");
  }
  trim_trailing_zeros(alpha_);
  trim_trailing_zeros(beta_);
}

ShuffleParams ShuffleParams::gsr(int k) {
  if (k < 1) throw InvalidParams("GSR shuffle needs k >= 1");
  return ShuffleParams(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)), {}, 0);
}

ShuffleParams ShuffleParams::uniform() { return ShuffleParams({}, {}, 1); }

ShuffleParams ShuffleParams::swapped() const { return ShuffleParams(beta_, alpha_, gamma_); }

Rational ShuffleParams::weight(int symbol) const {
  if (symbol == 0) return gamma_;
  const auto& side = symbol > 0 ? alpha_ : beta_;
  const auto idx = static_cast<std::size_t>(symbol > 0 ? symbol - 1 : -symbol - 1);
  return idx < side.size() ? side[idx] : Rational(0);
}

std::vector<std::pair<int, Rational>> ShuffleParams::support() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = beta_.size(); i-- > 0;) {
    if (beta_[i] > 0) out.emplace_back(-static_cast<int>(i + 1), beta_[i]);
  }
  if (gamma_ > 0) out.emplace_back(0, gamma_);
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] > 0) out.emplace_back(static_cast<int>(i + 1), alpha_[i]);
  }
  return out;
}

Rational ShuffleParams::collision_probability() const {
  Rational s = 0;
  for (const auto& a : alpha_) s += a * a;
  for (const auto& b : beta_) s += b * b;
  return s;
}

Rational ShuffleParams::max_alpha() const {
  Rational m = 0;
  for (const auto& a : alpha_) m = std::max(m, a);
  return m;
}

std::string ShuffleParams::describe() const {
  auto list = [](const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += to_string(v[i]);
    }
    return s + ")";
  };
  return "alpha=" + list(alpha_) + " beta=" + list(beta_) + " gamma=" + to_string(gamma_);
}

std::vector<Rational> extended_h_sequence(const ShuffleParams& p, int kmax) {
  if (kmax < 0) return {};
  const auto len = static_cast<std::size_t>(kmax) + 1;
  std::vector<Rational> h(len);
  // e^{γz}
  h[0] = 1;
  for (std::size_t k = 1; k < len; ++k) h[k] = h[k - 1] * p.gamma() / static_cast<long>(k);
  // (1 + βz): new_k = old_k + β old_{k-1}, update from the top down.
  for (const auto& b : p.beta()) {
    for (std::size_t k = len; k-- > 1;) h[k] += b * h[k - 1];
  }
  // 1/(1 - αz): new_k = old_k + α new_{k-1}, update from the bottom up.
  for (const auto& a : p.alpha()) {
    for (std::size_t k = 1; k < len; ++k) h[k] += a * h[k - 1];
  }
  return h;
}

Rational jacobi_trudi(const std::vector<Rational>& h, const Partition& lambda) {
  const int n = lambda.length();
  Matrix<Rational> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = lambda[i] - i + j;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (idx < 0 || idx >= static_cast<int>(h.size())) ? Rational(0) : h[static_cast<std::size_t>(idx)];
    }
  }
  return determinant_bareiss(std::move(m));
}

Rational extended_schur(const ShuffleParams& p, const Partition& lambda) {
  // Largest index needed is λ_1 + ℓ(λ) - 1.
  const auto h = extended_h_sequence(p, lambda.largest() + lambda.length());
  return jacobi_trudi(h, lambda);
}

Rational extended_power_sum(const ShuffleParams& p, int n) {
  if (n < 1) throw std::invalid_argument("extended_power_sum requires n >= 1");
  if (n == 1) return 1;
  Rational s = 0;
  for (const auto& a : p.alpha()) s += pow(a, n);
  Rational t = 0;
  for (const auto& b : p.beta()) t += pow(b, n);
  return n % 2 == 0 ? Rational(s - t) : Rational(s + t);
}

Rational extended_power_sum(const ShuffleParams& p, const Partition& lambda) {
  Rational r = 1;
  for (int part : lambda.parts()) r *= extended_power_sum(p, part);
  return r;
}

std::vector<Rational> complete_homogeneous_at(const RationalPointSet& x, int kmax) {
  if (kmax < 0) return {};
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1, Rational(0));
  h[0] = 1;
  for (const auto& xi : x) {
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += xi * h[k - 1];
  }
  return h;
}

Rational schur_at(const Partition& lambda, const RationalPointSet& x) {
  if (lambda.length() > static_cast<int>(x.size())) return 0;
  const auto h = complete_homogeneous_at(x, lambda.largest() + lambda.length());
  return jacobi_trudi(h, lambda);
}

Rational power_sum_at(const Partition& lambda, const RationalPointSet& x) {
  Rational r = 1;
  for (int part : lambda.parts()) {
    Rational s = 0;
    for (const auto& xi : x) s += pow(xi, part);
    r *= s;
  }
  return r;
}

Rational principal_specialization(const Partition& lambda, const Rational& base, int k) {
  if (base == 0) throw std::invalid_argument("principal_specialization: base must be nonzero");
  if (k < 1) throw std::invalid_argument("principal_specialization: k must be >= 1");
  RationalPointSet x;
  Rational v = 1;
  for (int i = 0; i < k; ++i) {
    x.push_back(v);
    v /= base;
  }
  return schur_at(lambda, x);
}

}  // namespace shufflesym
