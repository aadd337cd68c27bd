#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "parthom/rational.hpp"

namespace parthom {

/// Integer matrix stored by columns; each column sorted by row index.
struct SparseIntMatrix {
  using Entry = std::pair<std::uint32_t, long>;

  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const { return columns.size(); }
  std::size_t nonzeros() const;
  /// Sparse triplet text: a header line "rows cols nnz", then one
  /// "row col value" line per nonzero (0-based, column-major order).
  void write_triplets(std::ostream& os) const;
};

struct SmithInvariants {
  std::size_t rank = 0;
  /// Invariant factors greater than one, each dividing the next.
  std::vector<Integer> torsion;
};

/// Smith invariants over Z. Unit pivots are eliminated sparsely first; the
/// remaining core goes through dense Smith normal form with minimal-absolute-
/// value pivoting on arbitrary-precision integers.
SmithInvariants smith_invariants(const SparseIntMatrix& a);

/// Nonzero diagonal of the Smith normal form of a dense matrix (absolute
/// values, each dividing the next).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a);

/// Rank over Q by exact rational elimination; independent of smith_invariants.
std::size_t rank_over_rationals(const SparseIntMatrix& a);

}  // namespace parthom
