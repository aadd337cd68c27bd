#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parthom/set_partition.hpp"

namespace parthom {

/// Subposet families of the partition lattice.
enum class Family {
  full,      // every proper element
  ranks,     // rank-selected: rank in a given set
  qnk,       // drop modular elements whose non-singleton block has size k
  pnk,       // drop modular elements whose non-singleton block has size 2..k
  le,        // every block has size <= k
  ne,        // no block has size k
  even,      // even number of blocks (n even)
  even_top,  // top k nontrivial ranks of the even-block poset
};

/// Textual view description used by the CLI:
/// "full", "ranks:1,3,4", "qnk:k=3", "pnk:k=3", "le:k=2", "ne:k=3", "even", "even-top:k=2".
/// Rank lists also accept ranges ("ranks:1-3,5").
struct ViewSpec {
  Family family = Family::full;
  int k = 0;
  std::vector<int> ranks;  // only for Family::ranks; sorted, distinct

  static ViewSpec parse(std::string_view text);
  static ViewSpec full() { return {}; }
  static ViewSpec rank_selected(std::vector<int> ranks);
  static ViewSpec with_k(Family family, int k);
  std::string to_string() const;

  friend bool operator==(const ViewSpec&, const ViewSpec&) = default;
};

/// Thrown for view parameters that do not describe a subposet of Pi_n.
class InvalidView : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "1-3,5" style lists into a sorted set of distinct positive integers.
std::vector<int> parse_int_list(std::string_view text);

/// An induced subposet of the proper part of Pi_n.
///
/// Elements are generated rank by rank with the membership predicate applied
/// during generation; index order is rank-ascending, so it is a linear
/// extension of the refinement order. The bounds are never stored.
class PosetView {
 public:
  /// Largest n whose views are materialized.
  static constexpr int kMaxN = 10;

  /// Throws InvalidView for bad parameters or n outside [2, kMaxN].
  PosetView(int n, ViewSpec spec);

  int n() const { return n_; }
  const ViewSpec& spec() const { return spec_; }
  std::string name() const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const SetPartition& element(std::uint32_t i) const { return elements_[i]; }
  std::span<const SetPartition> elements() const { return elements_; }

  /// Ranks that have at least one element, ascending.
  std::vector<int> occupied_ranks() const;
  /// Indices of the elements of rank r (possibly empty).
  std::span<const std::uint32_t> rank_indices(int r) const;

  /// Membership predicate (applied to any proper element of Pi_n).
  bool contains(const SetPartition& x) const;
  std::optional<std::uint32_t> index_of(const SetPartition& x) const;

  /// All view elements strictly below element i, ascending indices.
  std::span<const std::uint32_t> below(std::uint32_t i) const;
  /// Elements covered by i inside the view.
  std::span<const std::uint32_t> lower_covers(std::uint32_t i) const;
  /// True when nothing in the view lies above i.
  bool is_maximal(std::uint32_t i) const;

  /// Whether the view is closed under S_n (checked on the generators (12) and (1 2 ... n)).
  bool is_symmetric() const;

 private:
  void generate();
  void build_order() const;
  bool rank_allowed(int r) const;

  int n_;
  ViewSpec spec_;
  std::vector<SetPartition> elements_;
  std::vector<std::vector<std::uint32_t>> by_rank_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;

  mutable std::once_flag order_once_;
  mutable std::vector<std::vector<std::uint32_t>> below_;
  mutable std::vector<std::vector<std::uint32_t>> covers_;
  mutable std::vector<bool> maximal_;
};

}  // namespace parthom
