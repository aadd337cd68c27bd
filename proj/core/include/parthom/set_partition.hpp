#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parthom/int_partition.hpp"
#include "parthom/rational.hpp"

namespace parthom {

/// Largest ground set a SetPartition can hold.
inline constexpr int kMaxGroundSet = 16;

/// A partition of {1..n} into nonempty blocks, stored as a restricted growth
/// string: element i gets the index of its block, blocks numbered in order of
/// their smallest element. Equality is equality of that canonical form.
class SetPartition {
 public:
  /// The all-singletons partition of {1..n}.
  explicit SetPartition(int n = 0);

  /// Throws std::invalid_argument unless `labels` is a restricted growth string.
  static SetPartition from_rgs(std::span<const std::uint8_t> labels);
  /// Any block labelling; relabelled to canonical form.
  static SetPartition from_labels(std::span<const int> labels);
  /// Blocks of 1-based elements; must cover {1..n} disjointly.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// "12|3|4" (single-digit elements) or "1,2|3,4,5"; n is the largest element.
  static SetPartition parse(std::string_view text);
  static SetPartition top(int n);

  int n() const { return n_; }
  int block_count() const { return blocks_; }
  int rank() const { return n_ - blocks_; }
  /// Block index (0-based, canonical) of 0-based element i.
  int block_of(int i) const { return rgs_[static_cast<std::size_t>(i)]; }
  /// Block sizes indexed by canonical block number.
  std::vector<int> block_sizes() const;
  /// Blocks as 1-based element lists, sorted by minimum element.
  std::vector<std::vector<int>> blocks() const;
  /// Packed 4-bit labels; equal keys iff equal partitions (for fixed n).
  std::uint64_t key() const;

  /// "12|34|5", or comma-separated elements when n > 9.
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.rgs_ == b.rgs_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

 private:
  std::array<std::uint8_t, kMaxGroundSet> rgs_{};
  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
};

/// Refinement order: every block of x lies inside a block of y.
/// Throws std::invalid_argument if the ground sets differ.
bool leq(const SetPartition& x, const SetPartition& y);

/// Block sizes in decreasing order.
IntPartition type_of(const SetPartition& x);

/// A permutation of {1..n}, stored 0-based.
class Permutation {
 public:
  static Permutation identity(int n);
  /// One-line notation, 1-based: images[i-1] = g(i). Throws unless a bijection.
  static Permutation from_one_line(const std::vector<int>& images);
  /// Cycles of consecutive integers, longest first: (3,2,1) -> (1 2 3)(4 5)(6).
  static Permutation canonical_of_type(const IntPartition& cycle_type);

  int n() const { return static_cast<int>(image_.size()); }
  /// 0-based image of 0-based i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  IntPartition cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Relabels the elements of x through g: the block B becomes g(B).
SetPartition act(const Permutation& g, const SetPartition& x);

/// Stirling number of the second kind S(n,k).
Integer stirling2(int n, int k);

}  // namespace parthom
