#pragma once

#include <map>

#include "parthom/int_partition.hpp"
#include "parthom/rational.hpp"
#include "parthom/symfunc.hpp"

namespace parthom {

/// A class function on S_n: a rational value for every cycle type.
class ClassFunction {
 public:
  using Values = std::map<IntPartition, Rational, CanonicalOrder>;

  /// The zero class function on S_n.
  explicit ClassFunction(int n = 0);

  /// chi(mu) = <f, p_mu> for the degree-n part of f.
  static ClassFunction from_symfunc(const SymFunc& f, int n);

  int n() const { return n_; }
  const Values& values() const { return values_; }
  const Rational& at(const IntPartition& cycle_type) const;
  void set(const IntPartition& cycle_type, Rational value);

  /// Frobenius characteristic: sum_mu chi(mu) p_mu / z_mu.
  SymFunc frobenius() const;
  /// Value at the identity.
  const Rational& dimension() const { return at(IntPartition::column(n_)); }
  /// Zero on every cycle type that has a part of size 3 or more.
  bool vanishes_off_involutions() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  Values values_;
};

}  // namespace parthom
