#include "parthom/chains.hpp"

#include <stdexcept>

namespace parthom {

std::vector<Chain> maximal_chains(const PosetView& view) {
  std::vector<Chain> out;
  if (view.empty()) {
    out.emplace_back();
    return out;
  }
  // Depth-first descent from each maximal element along lower covers.
  std::vector<std::uint32_t> stack;
  auto descend = [&](auto&& self, std::uint32_t x) -> void {
    stack.push_back(x);
    const auto covers = view.lower_covers(x);
    if (covers.empty()) {
      out.push_back(Chain{{stack.rbegin(), stack.rend()}});
    } else {
      for (auto z : covers) self(self, z);
    }
    stack.pop_back();
  };
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    if (view.is_maximal(i)) descend(descend, i);
  }
  return out;
}

namespace {

Integer count_chains_through(const PosetView& view, const std::vector<bool>& allowed) {
  if (view.empty()) return 1;
  // Index order is rank-ascending, so covers are finalized before use.
  std::vector<Integer> ways(view.size(), Integer(0));
  Integer total = 0;
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    if (!allowed[i]) continue;
    const auto covers = view.lower_covers(i);
    if (covers.empty()) {
      ways[i] = 1;
    } else {
      for (auto z : covers) {
        if (allowed[z]) ways[i] += ways[z];
      }
    }
    if (view.is_maximal(i)) total += ways[i];
  }
  return total;
}

}  // namespace

Integer count_maximal_chains(const PosetView& view) {
  return count_chains_through(view, std::vector<bool>(view.size(), true));
}

std::vector<bool> fixed_elements(const PosetView& view, const Permutation& g) {
  if (g.n() != view.n()) throw std::invalid_argument("permutation degree differs from the view's ground set");
  std::vector<bool> fixed(view.size());
  for (std::uint32_t i = 0; i < view.size(); ++i) fixed[i] = act(g, view.element(i)) == view.element(i);
  return fixed;
}

Integer fixed_chain_count(const PosetView& view, const Permutation& g) {
  return count_chains_through(view, fixed_elements(view, g));
}

Integer fixed_chain_count(const PosetView& view, const IntPartition& cycle_type) {
  if (cycle_type.weight() != view.n()) throw std::invalid_argument("cycle type must be a partition of n");
  return fixed_chain_count(view, Permutation::canonical_of_type(cycle_type));
}

}  // namespace parthom
