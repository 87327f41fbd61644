#include "shufflesym/rsk.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "shufflesym/combinatorics.hpp"
#include "shufflesym/errors.hpp"

namespace shufflesym {

namespace {

// Whether incoming letter `x` displaces resident entry `e` under BRKV rules.
// For words of distinct positive letters this is the classical rule.
bool brkv_bumps(int x, int e) { return x < 0 ? e >= x : e > x; }

template <class Bumps>
InsertionResult row_insert_all(const std::vector<int>& letters, Bumps bumps) {
  InsertionResult out;
  auto& p = out.insertion.rows;
  auto& q = out.recording.rows;
  for (std::size_t step = 0; step < letters.size(); ++step) {
    int x = letters[step];
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto& r = p[row];
      auto it = std::find_if(r.begin(), r.end(), [&](int e) { return bumps(x, e); });
      if (it == r.end()) {
        r.push_back(x);
        q[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return out;
}

}  // namespace

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

std::string Tableau::pretty() const {
  std::size_t width = 1;
  for (const auto& r : rows) {
    for (int e : r) width = std::max(width, std::to_string(e).size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      const std::string s = std::to_string(r[j]);
      if (j) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

InsertionResult rsk(const Permutation& pi) {
  return row_insert_all(pi.images(), [](int x, int e) { return e > x; });
}

Partition rsk_shape(const Permutation& pi) { return rsk(pi).insertion.shape(); }

InsertionResult brkv_insert(const SignedWord& w) {
  if (std::find(w.begin(), w.end(), 0) != w.end()) {
    throw ZeroSymbol("brkv_insert: resolve zeros before insertion");
  }
  return row_insert_all(w, brkv_bumps);
}

bool is_standard(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      const int e = t.rows[i][j];
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) return false;
      seen[static_cast<std::size_t>(e)] = true;
      if (j > 0 && t.rows[i][j - 1] >= e) return false;
      if (i > 0 && t.rows[i - 1][j] >= e) return false;
    }
  }
  return true;
}

bool is_brkv_pair(const Tableau& p, const Tableau& q) {
  for (std::size_t i = 1; i < p.rows.size(); ++i) {
    if (p.rows[i].size() > p.rows[i - 1].size()) return false;
  }
  for (const auto& r : p.rows) {
    if (r.empty()) return false;
  }
  if (p.shape() != q.shape() || !is_standard(q)) return false;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
      const int e = p.rows[i][j];
      if (e == 0) return false;
      if (j > 0) {
        const int left = p.rows[i][j - 1];
        if (left > e || (left == e && e < 0)) return false;
      }
      if (i > 0) {
        const int above = p.rows[i - 1][j];
        if (above > e || (above == e && e > 0)) return false;
      }
    }
  }
  return true;
}

SignedWord brkv_inverse(const Tableau& p_in, const Tableau& q_in) {
  if (!is_brkv_pair(p_in, q_in)) throw InvalidPair("brkv_inverse: (P, Q) violates the BRKV conditions");
  auto p = p_in.rows;
  auto q = q_in.rows;
  const int n = q_in.size();
  SignedWord word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    std::size_t row = 0;
    while (q[row].back() != step) ++row;  // step is the largest entry: always at a row end
    q[row].pop_back();
    int x = p[row].back();
    p[row].pop_back();
    if (p[row].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (row-- > 0) {
      // x was bumped out of this row by the rightmost entry that would bump it.
      auto& r = p[row];
      std::size_t j = r.size();
      while (j-- > 0) {
        if (brkv_bumps(r[j], x)) break;
      }
      std::swap(x, r[j]);
    }
    word[static_cast<std::size_t>(step - 1)] = x;
  }
  return word;
}

SignedWord resolve_zeros(const SignedWord& w, const Permutation& zero_arrangement) {
  const auto r = static_cast<int>(std::count(w.begin(), w.end(), 0));
  if (zero_arrangement.size() != r) throw SizeMismatch("resolve_zeros: arrangement size != zero count");
  SignedWord out(w.size());
  int j = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[i] == 0 ? zero_arrangement(++j) : w[i] * (r + 1);
  }
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  const int n = lambda.size();
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  Tableau current;
  current.rows.assign(static_cast<std::size_t>(lambda.length()), {});
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(current);
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const bool room = filled[iu] < lambda[i];
      const bool supported = i == 0 || filled[iu - 1] > filled[iu];
      if (!room || !supported) continue;
      ++filled[iu];
      current.rows[iu].push_back(next);
      rec(next + 1);
      current.rows[iu].pop_back();
      --filled[iu];
    }
  };
  rec(1);
  return out;
}

std::vector<int> tableau_descents(const Tableau& q) {
  const int n = q.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    for (int e : q.rows[i]) row_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

Rational maj_measure(const Permutation& pi, const Rational& p, const Rational& q, int k, int l) {
  const int n = pi.size();
  const auto fwd = descent_stats(pi);
  const auto inv = descent_stats(pi.inverse());
  return pow(p, inv.major_index) * pow(q, fwd.major_index) *
         q_binomial(k - inv.descents + n - 1, n, p) * q_binomial(l - fwd.descents + n - 1, n, q);
}

}  // namespace shufflesym
