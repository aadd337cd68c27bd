#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parthom/poset_view.hpp"

namespace parthom {

/// A chain of view elements, strictly increasing (bottom first), as indices
/// into the view.
struct Chain {
  std::vector<std::uint32_t> elements;
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// All maximal chains of the view (saturated chains from a minimal to a
/// maximal element). An empty view has exactly one, empty, maximal chain.
std::vector<Chain> maximal_chains(const PosetView& view);

/// Number of maximal chains, by dynamic programming over lower covers.
Integer count_maximal_chains(const PosetView& view);

/// Elements of the view fixed by g.
std::vector<bool> fixed_elements(const PosetView& view, const Permutation& g);

/// Number of maximal chains of the view fixed pointwise by the canonical
/// permutation of `cycle_type` (consecutive cycles, longest first).
Integer fixed_chain_count(const PosetView& view, const IntPartition& cycle_type);

/// Same count for an arbitrary permutation.
Integer fixed_chain_count(const PosetView& view, const Permutation& g);

}  // namespace parthom
