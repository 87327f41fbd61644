#include "shufflesym/shuffle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include "shufflesym/errors.hpp"

namespace shufflesym {

namespace {

using Support = std::vector<std::pair<int, Rational>>;

// Calls f(word, weight) for every word in support^n.
void for_each_word(const Support& support, int n,
                   const std::function<void(const SignedWord&, const Rational&)>& f) {
  const auto k = support.size();
  if (k == 0) return;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  SignedWord word(static_cast<std::size_t>(n));
  while (true) {
    Rational weight = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      word[i] = support[digits[i]].first;
      weight *= support[digits[i]].second;
    }
    f(word, weight);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == k) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
}

void check_budget(const ShuffleParams& p, int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("deck size must be nonnegative");
  if (n > limits.max_deck) {
    throw EnumerationTooLarge("deck size " + std::to_string(n) + " exceeds enumeration cap " +
                              std::to_string(limits.max_deck));
  }
  const auto support = p.support().size();
  long double work = 1;
  for (int i = 0; i < n; ++i) work *= static_cast<long double>(support);
  if (p.gamma() > 0) {
    for (int i = 2; i <= n; ++i) work *= i;
  }
  if (work > static_cast<long double>(limits.max_work)) {
    throw EnumerationTooLarge("enumeration work " + std::to_string(static_cast<double>(work)) +
                              " exceeds budget " + std::to_string(limits.max_work));
  }
}

std::vector<int> zero_positions(const SignedWord& w) {
  std::vector<int> z;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) z.push_back(static_cast<int>(i) + 1);
  }
  return z;
}

}  // namespace

ExactDistribution ExactDistribution::point_mass(const Permutation& pi) {
  ExactDistribution d(pi.size());
  d.add(pi, 1);
  return d;
}

ExactDistribution ExactDistribution::uniform(int deck_size) {
  ExactDistribution d(deck_size);
  const Rational mass(1, factorial(static_cast<unsigned long>(deck_size)));
  for (const auto& pi : all_permutations(deck_size)) d.add(pi, mass);
  return d;
}

void ExactDistribution::add(const Permutation& pi, const Rational& weight) {
  if (pi.size() != deck_size_) {
    throw SizeMismatch("permutation of size " + std::to_string(pi.size()) +
                       " added to distribution of deck size " + std::to_string(deck_size_));
  }
  if (weight == 0) return;
  auto [it, inserted] = entries_.try_emplace(pi, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational ExactDistribution::probability(const Permutation& pi) const {
  auto it = entries_.find(pi);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational ExactDistribution::total() const {
  Rational t = 0;
  for (const auto& [pi, w] : entries_) t += w;
  return t;
}

ExactDistribution ExactDistribution::inverse() const {
  ExactDistribution out(deck_size_);
  for (const auto& [pi, w] : entries_) out.add(pi.inverse(), w);
  return out;
}

bool operator==(const ExactDistribution& a, const ExactDistribution& b) {
  return a.deck_size_ == b.deck_size_ && a.entries_ == b.entries_;
}

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits limits;
  const char* env = std::getenv("SHUFFLE_SYM_BUDGET");
  if (env == nullptr || *env == '\0') return limits;
  const std::string text(env);
  const auto comma = text.find(',');
  try {
    limits.max_work = std::stoll(text.substr(0, comma));
    if (comma != std::string::npos) limits.max_deck = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw InvalidParams("SHUFFLE_SYM_BUDGET must be '<work>' or '<work>,<max_deck>'");
  }
  return limits;
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

SignedWord sample_word(const ShuffleParams& p, int n, std::uint64_t seed) {
  const auto support = p.support();
  std::vector<double> weights;
  weights.reserve(support.size());
  for (const auto& [symbol, w] : support) weights.push_back(w.get_d());
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  auto engine = make_stream(seed, kWordStream);
  SignedWord word(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& letter : word) letter = support[pick(engine)].first;
  return word;
}

Permutation word_to_permutation(const SignedWord& w, const Permutation& zero_arrangement) {
  const auto zeros = zero_positions(w);
  if (zero_arrangement.size() != static_cast<int>(zeros.size())) {
    throw SizeMismatch("zero arrangement has size " + std::to_string(zero_arrangement.size()) +
                       " but the word has " + std::to_string(zeros.size()) + " zeros");
  }
  // Group positions by letter; std::map iterates letters in increasing order.
  std::map<int, std::vector<int>> blocks;
  for (std::size_t i = 0; i < w.size(); ++i) blocks[w[i]].push_back(static_cast<int>(i) + 1);

  std::vector<int> images(w.size());
  int next = 1;
  for (const auto& [letter, positions] : blocks) {
    const int count = static_cast<int>(positions.size());
    for (int j = 0; j < count; ++j) {
      const auto pos = static_cast<std::size_t>(positions[static_cast<std::size_t>(j)] - 1);
      if (letter < 0) {
        images[pos] = next + count - 1 - j;
      } else if (letter == 0) {
        images[pos] = next - 1 + zero_arrangement(j + 1);
      } else {
        images[pos] = next + j;
      }
    }
    next += count;
  }
  return Permutation(std::move(images));
}

Permutation word_to_permutation(const SignedWord& w, std::uint64_t seed) {
  const auto r = static_cast<int>(std::count(w.begin(), w.end(), 0));
  std::vector<int> arrangement = Permutation::identity(r).images();
  auto engine = make_stream(seed, kArrangementStream);
  std::shuffle(arrangement.begin(), arrangement.end(), engine);
  return word_to_permutation(w, Permutation(std::move(arrangement)));
}

Permutation sample_shuffle(const ShuffleParams& p, int n, std::uint64_t seed) {
  return word_to_permutation(sample_word(p, n, seed), seed);
}

ExactDistribution exact_shuffle_distribution(const ShuffleParams& p, int n,
                                             const EnumerationLimits& limits) {
  check_budget(p, n, limits);
  ExactDistribution dist(n);
  std::map<int, std::vector<Permutation>> arrangements;  // by zero count
  for_each_word(p.support(), n, [&](const SignedWord& w, const Rational& weight) {
    const auto r = static_cast<int>(std::count(w.begin(), w.end(), 0));
    auto& perms = arrangements[r];
    if (perms.empty()) perms = all_permutations(r);
    const Rational share = weight / Rational(factorial(static_cast<unsigned long>(r)));
    for (const auto& sigma : perms) dist.add(word_to_permutation(w, sigma), share);
  });
  return dist;
}

ExactDistribution convolve(const ExactDistribution& first, const ExactDistribution& second) {
  if (first.deck_size() != second.deck_size()) {
    throw SizeMismatch("convolving distributions of deck sizes " + std::to_string(first.deck_size()) +
                       " and " + std::to_string(second.deck_size()));
  }
  ExactDistribution out(first.deck_size());
  for (const auto& [p1, w1] : first.entries()) {
    for (const auto& [p2, w2] : second.entries()) out.add(p1 * p2, w1 * w2);
  }
  return out;
}

ExactDistribution convolve_power(const ExactDistribution& d, int k) {
  if (k < 1) throw std::invalid_argument("convolve_power requires k >= 1");
  ExactDistribution out = d;
  for (int i = 1; i < k; ++i) out = convolve(out, d);
  return out;
}

Permutation inverse_shuffle_from_labels(const SignedWord& labels, const std::vector<int>& zero_pile) {
  std::map<int, std::vector<int>> piles;  // pile contents, top to bottom
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const int card = static_cast<int>(c) + 1;
    auto& pile = piles[labels[c]];
    if (labels[c] <= 0) {
      pile.insert(pile.begin(), card);  // face down: the new card lands on top
    } else {
      pile.push_back(card);  // face up, later turned over: dealing order from the top
    }
  }
  if (auto it = piles.find(0); it != piles.end()) {
    std::vector<int> sorted_pile = it->second;
    std::vector<int> sorted_mix = zero_pile;
    std::sort(sorted_pile.begin(), sorted_pile.end());
    std::sort(sorted_mix.begin(), sorted_mix.end());
    if (sorted_pile != sorted_mix) {
      throw std::invalid_argument("zero_pile must be an ordering of the cards labelled 0");
    }
    it->second = zero_pile;
  } else if (!zero_pile.empty()) {
    throw std::invalid_argument("zero_pile given but no card is labelled 0");
  }
  std::vector<int> deck;
  deck.reserve(labels.size());
  for (const auto& [label, pile] : piles) deck.insert(deck.end(), pile.begin(), pile.end());
  return Permutation(std::move(deck));
}

Permutation inverse_shuffle_sample(const ShuffleParams& p, int n, std::uint64_t seed) {
  const SignedWord labels = sample_word(p, n, seed);
  std::vector<int> zero_pile;
  for (std::size_t c = labels.size(); c-- > 0;) {
    if (labels[c] == 0) zero_pile.push_back(static_cast<int>(c) + 1);
  }
  auto engine = make_stream(seed, kArrangementStream);
  std::shuffle(zero_pile.begin(), zero_pile.end(), engine);
  return inverse_shuffle_from_labels(labels, zero_pile);
}

ExactDistribution exact_inverse_distribution(const ShuffleParams& p, int n,
                                             const EnumerationLimits& limits) {
  check_budget(p, n, limits);
  ExactDistribution dist(n);
  for_each_word(p.support(), n, [&](const SignedWord& labels, const Rational& weight) {
    std::vector<int> zero_cards = zero_positions(labels);
    const Rational share =
        weight / Rational(factorial(static_cast<unsigned long>(zero_cards.size())));
    do {
      dist.add(inverse_shuffle_from_labels(labels, zero_cards), share);
    } while (std::next_permutation(zero_cards.begin(), zero_cards.end()));
  });
  return dist;
}

}  // namespace shufflesym
