#include "shufflesym/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "shufflesym/combinatorics.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/rsk.hpp"
#include "shufflesym/shuffle.hpp"

namespace shufflesym {

namespace {

struct Ranked {
  double x;
  double y;  // level, or continuum height
  int level;  // 0 for continuum points
};

std::vector<Ranked> flatten(const PointConfig& c) {
  std::vector<Ranked> pts;
  for (const auto& p : c.continuum) {
    if (p.y < 0 || p.y >= 1) throw std::invalid_argument("continuum y must lie in [0, 1)");
    pts.push_back({p.x, p.y, 0});
  }
  for (const auto& p : c.lines) {
    if (p.level == 0) throw std::invalid_argument("line level must be nonzero");
    pts.push_back({p.x, static_cast<double>(p.level), p.level});
  }
  std::sort(pts.begin(), pts.end(), [](const Ranked& a, const Ranked& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x == pts[i - 1].x) throw DuplicateX("two points share x = " + std::to_string(pts[i].x));
  }
  return pts;
}

// a (left of b) may precede b in an increasing subsequence.
bool increasing_pair(const Ranked& a, const Ranked& b) {
  if (a.y != b.y) return a.y < b.y;
  return a.level > 0;
}

}  // namespace

PointConfig sample_br(const Rational& gamma_plus, const ShuffleParams& p_minus, std::uint64_t seed) {
  if (gamma_plus <= 0) throw std::invalid_argument("gamma_plus must be positive");
  auto rng = make_stream(seed, kPointStream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::set<double> used;
  auto fresh_x = [&] {
    double x = unit(rng);
    while (!used.insert(x).second) x = unit(rng);
    return x;
  };
  auto poisson = [&](const Rational& mean) {
    const double m = mean.get_d();
    if (m <= 0) return 0;
    return std::poisson_distribution<int>(m)(rng);
  };

  PointConfig c;
  const int continuum = poisson(gamma_plus * p_minus.gamma());
  for (int k = 0; k < continuum; ++k) {
    const double x = fresh_x();
    c.continuum.push_back({x, unit(rng)});
  }
  for (const auto& [symbol, weight] : p_minus.support()) {
    if (symbol == 0) continue;
    const int count = poisson(gamma_plus * weight);
    for (int k = 0; k < count; ++k) c.lines.push_back({fresh_x(), symbol});
  }
  return c;
}

Permutation points_to_permutation(const PointConfig& c) {
  const auto pts = flatten(c);
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& a = pts[i];
    const auto& b = pts[j];
    if (a.y != b.y) return a.y < b.y;
    return a.level < 0 ? a.x > b.x : a.x < b.x;
  });
  std::vector<int> images(pts.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) images[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(images));
}

Partition br_partition(const PointConfig& c) {
  if (c.size() == 0) return Partition();
  return rsk_shape(points_to_permutation(c));
}

Partition br_partition_bruteforce(const PointConfig& c) {
  const int n = c.size();
  if (n > kBruteforcePointCap) {
    throw TooManyPoints(std::to_string(n) + " points exceed the brute-force cap of " +
                        std::to_string(kBruteforcePointCap));
  }
  const auto pts = flatten(c);
  const std::size_t full = std::size_t{1} << n;

  std::vector<bool> chain(full, false);
  for (std::size_t s = 0; s < full; ++s) {
    bool ok = true;
    int prev = -1;
    for (int i = 0; i < n && ok; ++i) {
      if (!(s >> i & 1)) continue;
      if (prev >= 0) ok = increasing_pair(pts[static_cast<std::size_t>(prev)], pts[static_cast<std::size_t>(i)]);
      prev = i;
    }
    chain[s] = ok;
  }

  // cover[s]: fewest increasing subsequences whose union is s.
  std::vector<int> cover(full, n + 1);
  cover[0] = 0;
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t low = s & (~s + 1);
    const std::size_t rest = s ^ low;
    for (std::size_t t = rest;; t = (t - 1) & rest) {
      if (chain[t | low]) cover[s] = std::min(cover[s], 1 + cover[s ^ (t | low)]);
      if (t == 0) break;
    }
  }

  std::vector<int> best(static_cast<std::size_t>(n) + 1, 0);  // best[l] = λ_1 + ... + λ_l
  for (std::size_t s = 0; s < full; ++s) {
    const int size = __builtin_popcountll(s);
    for (int l = cover[s]; l <= n; ++l) best[static_cast<std::size_t>(l)] = std::max(best[static_cast<std::size_t>(l)], size);
  }
  std::vector<int> parts;
  for (int l = 1; l <= n; ++l) {
    const int part = best[static_cast<std::size_t>(l)] - best[static_cast<std::size_t>(l - 1)];
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

ShapeProbability br_shape_probability(const Partition& lambda, const Rational& gamma_plus,
                                      const ShuffleParams& p_minus) {
  if (gamma_plus <= 0) throw std::invalid_argument("gamma_plus must be positive");
  const int n = lambda.size();
  ShapeProbability out;
  out.coefficient = pow(gamma_plus, n) * Rational(hook_length_count(lambda)) * extended_schur(p_minus, lambda) /
                    Rational(factorial(static_cast<unsigned long>(n)));
  out.value = std::exp(-gamma_plus.get_d()) * out.coefficient.get_d();
  return out;
}

}  // namespace shufflesym
