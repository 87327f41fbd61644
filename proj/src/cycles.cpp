#include "shufflesym/cycles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "shufflesym/combinatorics.hpp"
#include "shufflesym/errors.hpp"

namespace shufflesym {

namespace {

using Coeffs = std::vector<Rational>;

// exp(g) truncated at degree deg, for g with g_0 = 0: k f_k = Σ_j j g_j f_{k-j}.
Coeffs series_exp(const Coeffs& g, int deg) {
  Coeffs f(static_cast<std::size_t>(deg) + 1, Rational(0));
  f[0] = 1;
  for (int k = 1; k <= deg; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(g.size()); ++j) {
      acc += j * g[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
    }
    f[static_cast<std::size_t>(k)] = acc / k;
  }
  return f;
}

Coeffs series_mul(const Coeffs& a, const Coeffs& b, int deg) {
  Coeffs c(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (int i = 0; i <= deg && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= deg && j < static_cast<int>(b.size()); ++j) {
      c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return c;
}

// factors[i] is the series F_i(y) in the i-cycle variable; P(λ) = ∏ F_i[m_i].
CycleTypeDistribution law_from_factors(int n, const std::vector<Coeffs>& factors) {
  CycleTypeDistribution law(n);
  for (const auto& lambda : partitions_of(n)) {
    Rational prob = 1;
    for (int i = 1; i <= n && prob != 0; ++i) {
      const int m = lambda.multiplicity(i);
      if (m > 0) prob *= factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    }
    law.add(lambda, prob);
  }
  return law;
}

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("deck size must be nonnegative");
  if (n > cap) {
    throw CapExceeded("deck size " + std::to_string(n) + " exceeds cycle-index cap " + std::to_string(cap));
  }
}

}  // namespace

void CycleTypeDistribution::add(const Partition& lambda, const Rational& weight) {
  if (lambda.size() != deck_size_) throw SizeMismatch("cycle type does not partition the deck size");
  if (weight == 0) return;
  auto [it, inserted] = entries_.try_emplace(lambda, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational CycleTypeDistribution::probability(const Partition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational CycleTypeDistribution::total() const {
  Rational t = 0;
  for (const auto& [lambda, w] : entries_) t += w;
  return t;
}

std::vector<Rational> CycleTypeDistribution::cycle_count_marginal(int i) const {
  if (i < 1) throw std::invalid_argument("cycle length must be >= 1");
  std::vector<Rational> out(static_cast<std::size_t>(deck_size_ / i) + 1, Rational(0));
  for (const auto& [lambda, w] : entries_) out[static_cast<std::size_t>(lambda.multiplicity(i))] += w;
  return out;
}

Rational CycleTypeDistribution::expected_cycle_count(int i) const {
  Rational e = 0;
  for (const auto& [lambda, w] : entries_) e += w * lambda.multiplicity(i);
  return e;
}

CycleTypeDistribution cycle_type_pushforward(const ExactDistribution& d) {
  CycleTypeDistribution out(d.deck_size());
  for (const auto& [pi, w] : d.entries()) out.add(cycle_type(pi), w);
  return out;
}

CycleTypeDistribution cycle_type_distribution(const ShuffleParams& p, int n, int cap) {
  check_cap(n, cap);
  std::vector<Rational> ptilde(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) ptilde[static_cast<std::size_t>(k)] = extended_power_sum(p, k);

  std::vector<Coeffs> factors(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int deg = n / i;
    Coeffs g(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (int j = 1; j <= deg; ++j) {
      Rational a = 0;
      for (long d : divisors(i)) {
        const int mu = moebius(d);
        if (mu != 0) a += mu * pow(ptilde[static_cast<std::size_t>(j * d)], i / d);
      }
      g[static_cast<std::size_t>(j)] = a / (i * j);
    }
    factors[static_cast<std::size_t>(i)] = series_exp(g, deg);
  }
  return law_from_factors(n, factors);
}

Rational expected_fixed_points(const ShuffleParams& p, int n) {
  if (n < 1) throw std::invalid_argument("expected_fixed_points requires n >= 1");
  Rational e = 0;
  for (int j = 1; j <= n; ++j) e += extended_power_sum(p, j);
  return e;
}

Rational separation_bound(const ShuffleParams& p, int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("separation_bound requires k, n >= 1");
  return Rational(binomial(n, 2)) * pow(p.collision_probability(), k);
}

Distances exact_distances(const ExactDistribution& d, int max_deck) {
  const int n = d.deck_size();
  if (n > max_deck) {
    throw CapExceeded("deck size " + std::to_string(n) + " exceeds distance cap " + std::to_string(max_deck));
  }
  const Rational n_fact(factorial(static_cast<unsigned long>(n)));
  const Rational uniform = 1 / n_fact;
  Distances out{Rational(0), Rational(0)};
  bool first = true;
  for (const auto& pi : all_permutations(n)) {
    const Rational prob = d.probability(pi);
    const Rational sep = 1 - n_fact * prob;
    if (first || sep > out.separation) out.separation = sep;
    first = false;
    out.total_variation += abs(prob - uniform);
  }
  out.total_variation /= 2;
  return out;
}

Integer necklace_count(int i, long q) {
  if (i < 1 || q < 1) throw std::invalid_argument("necklace_count requires i, q >= 1");
  Integer sum = 0;
  for (long d : divisors(i)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i / d));
    sum += mu * power;
  }
  if (sum % i != 0) throw std::logic_error("necklace count not integral");
  return sum / i;
}

LimitCyclePmf limit_cycle_pmf(int i, long q, const Rational& gamma, const Rational& u, int cap) {
  if (i < 1 || q < 1 || cap < 0) throw std::invalid_argument("limit_cycle_pmf requires i, q >= 1, cap >= 0");
  if (gamma < 0 || gamma > 1) throw std::invalid_argument("gamma must lie in [0, 1]");
  if (u <= 0 || u > 1) throw std::invalid_argument("u must lie in (0, 1]");

  LimitCyclePmf out;
  out.i = i;
  out.q = q;
  out.gamma = gamma;
  out.u = u;
  out.geometric_count = necklace_count(i, q);
  if (out.geometric_count < 0) throw NegativeMultiplicity("negative number of geometric factors");
  const Rational mean = pow(u, i) * (1 - pow(1 - gamma, i)) / i;
  const Rational x = pow(u * (1 - gamma) / q, i);
  if (x >= 1 && out.geometric_count > 0) {
    throw BoundaryParameter("geometric parameter equals 1 (identity shuffle limit); law undefined");
  }
  out.poisson_mean = mean.get_d();
  out.geometric_parameter = x.get_d();

  const auto len = static_cast<std::size_t>(cap) + 1;
  std::vector<double> poisson(len), negbin(len);
  poisson[0] = std::exp(-out.poisson_mean);
  for (std::size_t c = 1; c < len; ++c) poisson[c] = poisson[c - 1] * out.poisson_mean / static_cast<double>(c);
  // Sum of g geometrics: P(c) = C(g+c-1, c) (1-x)^g x^c.
  const double g = out.geometric_count.get_d();
  negbin[0] = std::pow(1 - out.geometric_parameter, g);
  for (std::size_t c = 1; c < len; ++c) {
    negbin[c] = negbin[c - 1] * (g + static_cast<double>(c) - 1) / static_cast<double>(c) * out.geometric_parameter;
  }
  out.pmf.assign(len, 0.0);
  double total = 0;
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t a = 0; a <= c; ++a) out.pmf[c] += poisson[a] * negbin[c - a];
    total += out.pmf[c];
  }
  out.tail_mass = std::max(0.0, 1 - total);
  return out;
}

CycleTypeDistribution mixed_riffle_cycle_index(long q, const Rational& gamma, int n, int cap) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (gamma < 0 || gamma > 1) throw InvalidParams("gamma must lie in [0, 1]");
  check_cap(n, cap);
  const Rational c = (1 - gamma) / q;
  std::vector<Coeffs> factors(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int deg = n / i;
    const Integer g = necklace_count(i, q);
    const Rational ci = pow(c, i);
    // (1 - ci y)^{-g} = Σ_k C(g+k-1, k) ci^k y^k
    Coeffs geometric(static_cast<std::size_t>(deg) + 1);
    Rational ci_pow = 1;
    for (int k = 0; k <= deg; ++k) {
      Integer coeff = 1;
      if (k > 0) {
        Integer top = g + k - 1;
        mpz_bin_ui(coeff.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
      }
      geometric[static_cast<std::size_t>(k)] = Rational(coeff) * ci_pow;
      ci_pow *= ci;
    }
    const Rational rate = (1 - pow(1 - gamma, i)) / i;
    Coeffs exponential(static_cast<std::size_t>(deg) + 1);
    exponential[0] = 1;
    for (int k = 1; k <= deg; ++k) exponential[static_cast<std::size_t>(k)] = exponential[static_cast<std::size_t>(k - 1)] * rate / k;
    factors[static_cast<std::size_t>(i)] = series_mul(geometric, exponential, deg);
  }
  return law_from_factors(n, factors);
}

}  // namespace shufflesym
