#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "parthom/rational.hpp"

namespace parthom {

/// An integer partition: weakly decreasing positive parts.
///
/// Used for Schur/h/e/m/p indices, cycle types of permutations, and block
/// types of set partitions.
class IntPartition {
 public:
  IntPartition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit IntPartition(std::vector<int> parts);
  IntPartition(std::initializer_list<int> parts);

  /// Sorts the parts; zeros are dropped, negatives rejected.
  static IntPartition from_unsorted(std::vector<int> parts);
  /// The single-row partition (n), or the empty partition for n = 0.
  static IntPartition row(int n);
  /// The single-column partition (1^n).
  static IntPartition column(int n);
  /// The hook (n-k, 1^k).
  static IntPartition hook(int n, int k);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int multiplicity(int part) const;
  IntPartition conjugate() const;
  /// Every part multiplied by k.
  IntPartition scaled(int k) const;
  /// Multiset union of parts.
  IntPartition merged(const IntPartition& other) const;
  /// Multiset difference; nullopt if `sub` is not contained in this partition.
  std::optional<IntPartition> without(const IntPartition& sub) const;
  /// Order of the centralizer of a permutation of this cycle type.
  Integer z() const;
  /// (-1)^(weight - length): the sign of a permutation of this cycle type.
  int sign() const { return ((weight_ - length()) % 2 == 0) ? 1 : -1; }

  /// "(3,1,1)"; "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const IntPartition& a, const IntPartition& b) { return a.parts_ == b.parts_; }
  /// Plain lexicographic comparison of part sequences.
  friend std::strong_ordering operator<=>(const IntPartition& a, const IntPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Canonical order used for every listing in the library: increasing weight,
/// then decreasing lexicographic order, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct CanonicalOrder {
  bool operator()(const IntPartition& a, const IntPartition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
  }
};

/// All partitions of n in decreasing lexicographic order; partitions_of(0) = {()}.
std::vector<IntPartition> partitions_of(int n);

struct IntPartitionHash {
  std::size_t operator()(const IntPartition& p) const noexcept;
};

}  // namespace parthom
