#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace shufflesym {

/// Integer partition: weakly decreasing positive parts. The empty sequence is
/// the partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros before validating; for building from cycle counts etc.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// λ_i with 0-based i; 0 beyond the length.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// m_i: number of parts equal to i.
  int multiplicity(int part) const noexcept;
  Partition conjugate() const;

  /// "a+b+c"; the empty partition prints as "0".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// All partitions of every size 0..max_size, grouped by size ascending.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace shufflesym
