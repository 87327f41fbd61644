#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace shufflesym {

/// Permutation of {1..n} in one-line form: images()[i-1] = π(i).
///
/// Composition is (σ * τ)(i) = σ(τ(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection on 1..n.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n);
  /// The longest element n n-1 ... 1.
  static Permutation longest(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  /// π(i) for 1-based i.
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Space separated one-line form, e.g. "2 1 3".
  std::string to_string() const;
  static Permutation parse(std::string_view text);

  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace shufflesym
