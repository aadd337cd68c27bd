#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "parthom/chains.hpp"
#include "parthom/poset_view.hpp"
#include "parthom/smith.hpp"

namespace parthom {

/// Augmented simplicial chain complex of an order complex. Dimension d holds
/// the chains with d+1 elements, vertices listed bottom first; dimension -1
/// is the single empty simplex, so homology computed from it is reduced.
class ChainComplex {
 public:
  /// Default cap on the total number of simplices.
  static constexpr std::size_t kDefaultSimplexBudget = 4'000'000;

  /// Every chain of the view's proper part. Throws FeasibilityError if the
  /// simplex count exceeds `simplex_budget`.
  static ChainComplex order_complex(const PosetView& view, std::size_t simplex_budget = kDefaultSimplexBudget);

  /// Largest d with a d-simplex; -1 for the empty complex.
  int top_dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  /// Number of d-simplices, d >= -1.
  std::size_t simplex_count(int d) const;
  const std::vector<Chain>& simplices(int d) const { return simplices_.at(static_cast<std::size_t>(d)); }
  /// The boundary map from dimension d to d-1 (d >= 0; d = 0 is the augmentation).
  const SparseIntMatrix& boundary(int d) const { return boundaries_.at(static_cast<std::size_t>(d)); }

  /// Checks that every composite of consecutive boundary maps vanishes.
  bool boundary_squared_zero() const;

 private:
  std::vector<std::vector<Chain>> simplices_;
  std::vector<SparseIntMatrix> boundaries_;
};

}  // namespace parthom
