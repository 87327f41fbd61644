#pragma once

#include <string>
#include <vector>

#include "shufflesym/partition.hpp"
#include "shufflesym/permutation.hpp"
#include "shufflesym/rational.hpp"
#include "shufflesym/shuffle.hpp"

namespace shufflesym {

/// Filled Young diagram, rows top to bottom. Entries are signed letters for
/// insertion tableaux and 1..n for standard recording tableaux.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const { return shape().size(); }
  /// Rows on separate lines, entries right-aligned in a common width.
  std::string pretty() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

struct InsertionResult {
  Tableau insertion;  // P
  Tableau recording;  // Q
};

/// Classical row-insertion RSK: each value bumps the leftmost larger entry.
InsertionResult rsk(const Permutation& pi);
Partition rsk_shape(const Permutation& pi);

/// Berele/Remmel/Kerov/Vershik insertion on a word of nonzero signed letters.
/// A negative letter bumps the leftmost entry >= itself (so it bumps its
/// own copies); a positive letter bumps the leftmost entry > itself.
/// Throws ZeroSymbol if the word contains 0.
InsertionResult brkv_insert(const SignedWord& w);

/// Reverse bumping: recovers the unique word with brkv_insert(w) == (P, Q).
/// Throws InvalidPair if (P, Q) fails is_brkv_pair.
SignedWord brkv_inverse(const Tableau& p, const Tableau& q);

/// The four conditions characterizing the image of brkv_insert: P is weakly
/// increasing along rows and columns, no positive letter repeats in a column,
/// no negative letter repeats in a row, Q is standard of the same shape, and
/// P contains no zeros.
bool is_brkv_pair(const Tableau& p, const Tableau& q);

bool is_standard(const Tableau& t);

/// Replaces the j-th zero (left to right) by an auxiliary positive letter
/// ranked zero_arrangement(j) among the zeros, below every original positive
/// letter. Letter order and signs are otherwise preserved, so the result
/// maps to the same permutation as word_to_permutation(w, zero_arrangement).
SignedWord resolve_zeros(const SignedWord& w, const Permutation& zero_arrangement);

/// All standard Young tableaux of shape λ.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Descent set of a standard tableau: i such that i+1 lies in a lower row.
std::vector<int> tableau_descents(const Tableau& q);

/// Unnormalized weight p^{maj(π⁻¹)} q^{maj(π)} [k-d(π⁻¹)+n-1, n]_p [l-d(π)+n-1, n]_q.
/// Propagates DegenerateEvaluation from q_binomial (p or q equal to 0).
Rational maj_measure(const Permutation& pi, const Rational& p, const Rational& q, int k, int l);

}  // namespace shufflesym
