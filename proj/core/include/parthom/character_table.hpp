#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "parthom/int_partition.hpp"
#include "parthom/rational.hpp"

namespace parthom {

/// Per-degree tables shared by all basis conversions.
///
/// Rows and columns are indexed by `partitions` (decreasing lexicographic).
/// Obtain instances through `degree_tables(n)`; they are built once and are
/// immutable afterwards, except for the lazily filled monomial table.
class DegreeTables {
 public:
  explicit DegreeTables(int n);

  int degree() const { return n_; }
  const std::vector<IntPartition>& partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }
  /// Index of a partition of n in `partitions()`; throws std::out_of_range otherwise.
  std::size_t index(const IntPartition& lambda) const;

  const Integer& z(std::size_t mu) const { return z_[mu]; }
  /// chi(lambda, mu): irreducible character lambda at cycle type mu.
  long chi(std::size_t lambda, std::size_t mu) const { return chi_[lambda][mu]; }
  /// Coefficient of p_mu in h_lambda.
  const Rational& complete_in_p(std::size_t lambda, std::size_t mu) const { return h_in_p_[lambda][mu]; }
  /// Coefficient of p_mu in m_lambda.
  const Rational& monomial_in_p(std::size_t lambda, std::size_t mu) const;

 private:
  void build_monomials() const;

  int n_;
  std::vector<IntPartition> partitions_;
  std::map<IntPartition, std::size_t> index_;
  std::vector<Integer> z_;
  std::vector<std::vector<long>> chi_;
  std::vector<std::vector<Rational>> h_in_p_;
  mutable std::once_flag monomial_once_;
  mutable std::vector<std::vector<Rational>> m_in_p_;
};

/// Cached tables for degree n; safe to call from several threads.
const DegreeTables& degree_tables(int n);

/// Murnaghan-Nakayama evaluation of the irreducible character chi^lambda at
/// cycle type mu (|lambda| = |mu|), by rim-hook removal on beta-sets.
long murnaghan_nakayama(const IntPartition& lambda, const IntPartition& mu);

}  // namespace parthom
