#include "shufflesym/combinatorics.hpp"

#include <stdexcept>

#include "shufflesym/errors.hpp"

namespace shufflesym {

Integer hook_length_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = conj[j] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  for (int i = 1; i <= lambda.largest(); ++i) {
    const int m = lambda.multiplicity(i);
    if (m == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    z *= power * factorial(static_cast<unsigned long>(m));
  }
  return z;
}

int moebius(long d) {
  if (d < 1) throw std::invalid_argument("moebius requires d >= 1");
  int sign = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Partition cycle_type(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = pi(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

DescentStats descent_stats(const Permutation& pi) {
  DescentStats stats;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i) > pi(i + 1)) {
      stats.descent_set.push_back(i);
      ++stats.descents;
      stats.major_index += i;
    }
  }
  return stats;
}

Rational q_binomial(long n, long m, const Rational& q) {
  if (q == 0) throw DegenerateEvaluation("q_binomial: q must be nonzero");
  if (n < 0) throw DegenerateEvaluation("q_binomial: n must be nonnegative");
  if (m < 0 || m > n) return 0;
  // row[k] holds [r choose k]_q for the current r.
  std::vector<Rational> row(static_cast<std::size_t>(m) + 1, Rational(0));
  row[0] = 1;
  std::vector<Rational> q_pow(static_cast<std::size_t>(m) + 1);
  q_pow[0] = 1;
  for (long k = 1; k <= m; ++k) q_pow[static_cast<std::size_t>(k)] = q_pow[static_cast<std::size_t>(k - 1)] * q;
  for (long r = 1; r <= n; ++r) {
    // [r,k] = [r-1,k-1] + q^k [r-1,k]; iterate k downward to reuse the row.
    for (long k = std::min(r, m); k >= 1; --k) {
      const auto ku = static_cast<std::size_t>(k);
      row[ku] = row[ku - 1] + q_pow[ku] * row[ku];
    }
  }
  return row[static_cast<std::size_t>(m)];
}

Permutation reverse_deck(const Permutation& pi) {
  std::vector<int> images(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) images[static_cast<std::size_t>(i - 1)] = pi.size() + 1 - pi(i);
  return Permutation(std::move(images));
}

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::SymbolDivergence: return "SymbolDivergence";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DegenerateEvaluation: return "DegenerateEvaluation";
    case ErrorCode::ZeroSymbol: return "ZeroSymbol";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::BoundaryParameter: return "BoundaryParameter";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace shufflesym
