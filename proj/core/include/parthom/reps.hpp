#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parthom/class_function.hpp"
#include "parthom/rational.hpp"
#include "parthom/symfunc.hpp"

namespace parthom {

/// A set of nontrivial ranks {s_1 < ... < s_r}; may be empty.
class RankSet {
 public:
  RankSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on ranks < 1.
  explicit RankSet(std::vector<int> ranks);
  /// "2,4,5", "1-3,5", "-" or "" for the empty set.
  static RankSet parse(std::string_view text);
  /// [a, b]; empty when b < a.
  static RankSet interval(int a, int b);

  const std::vector<int>& ranks() const { return ranks_; }
  bool empty() const { return ranks_.empty(); }
  std::size_t size() const { return ranks_.size(); }
  int min() const { return ranks_.front(); }
  int max() const { return ranks_.back(); }
  bool contains(int s) const;

  /// Throws std::invalid_argument unless every rank lies in [1, n-2].
  void validate(int n) const;
  bool fits(int n) const;

  /// Every rank plus d (ranks that would drop below 1 are an error).
  RankSet shifted(int d) const;
  /// {s_2 - s_1, ..., s_r - s_1}.
  RankSet peeled() const;
  /// S without s_1.
  RankSet without_min() const;
  RankSet with(int s) const;
  /// All subsets, in order of the bitmask over the sorted ranks.
  std::vector<RankSet> subsets() const;
  /// True when the set is [1, r] for some r >= 0.
  bool is_initial_interval() const;

  /// "2,4,5"; the empty set renders as "-".
  std::string to_string() const;

  friend bool operator==(const RankSet&, const RankSet&) = default;
  friend auto operator<=>(const RankSet&, const RankSet&) = default;

 private:
  std::vector<int> ranks_;
};

/// All rank sets inside [1, n-2], ordered by bitmask.
std::vector<RankSet> all_rank_sets(int n);

enum class AlphaMethod { chains, recurrence };
enum class BetaMethod { inclusion_exclusion, recurrence };

AlphaMethod parse_alpha_method(std::string_view name);
BetaMethod parse_beta_method(std::string_view name);
std::string_view method_name(AlphaMethod m);
std::string_view method_name(BetaMethod m);

/// Largest n for chain-based character computations.
inline constexpr int kMaxChainsN = 8;
/// Largest n for the plethystic recurrences.
inline constexpr int kMaxRecurrenceN = 12;

/// Frobenius characteristic (p basis) of S_n on the maximal chains of Pi_n(S).
/// Throws std::invalid_argument for bad S and FeasibilityError beyond the bounds.
SymFunc alpha(int n, const RankSet& s, AlphaMethod method = AlphaMethod::recurrence);

/// Frobenius characteristic (p basis) of the homology of Pi_n(S). The result
/// is checked for Schur positivity; a failure throws std::logic_error.
SymFunc beta(int n, const RankSet& s, BetaMethod method = BetaMethod::recurrence);

/// alpha and beta are memoized per (n, S, method); this drops the memo.
void clear_module_caches();

/// Character of alpha_S(n) from fixed maximal chains of each cycle type.
ClassFunction alpha_character(int n, const RankSet& s);

/// sgn tensored with the induced cyclic module: omega'((1/n) sum_{d|n} mu(d) p_d^{n/d}).
SymFunc lie_top_homology(int n);

/// pi_k h_1^{n-k} - pi_n with pi_m = lie_top_homology(m), for 2 <= k <= n-1.
SymFunc whitehouse(int n, int k);

struct Multiplicities {
  Integer a, a_prime, b, b_prime;
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// Trivial-module multiplicities of S_n and S_{n-1} x S_1 in alpha_S(n) and beta_S(n).
Multiplicities multiplicities(int n, const RankSet& s, BetaMethod method = BetaMethod::recurrence);

/// Coefficient of s_lambda in f, required to be an integer.
Integer schur_multiplicity(const SymFunc& f, const IntPartition& lambda);

/// R_{2n} = sum_i b_i(n) h_2^i h_1^{2n-2i}; when 2n is within the recurrence
/// bound it is compared with beta(2n, even ranks) and a mismatch throws std::logic_error.
SymFunc r_even(int n);
/// sum_i E_i(n) h_2^i e_2^{n-i}.
SymFunc r_even_e2_form(int n);
/// The even ranks {2, 4, ..., 2n-2} of Pi_{2n}.
RankSet even_ranks(int n);
/// The top k nontrivial ranks of the even-block poset of Pi_{2n}.
RankSet even_top_ranks(int n, int k);

}  // namespace parthom
