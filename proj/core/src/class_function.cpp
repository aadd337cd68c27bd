#include "parthom/class_function.hpp"

#include <stdexcept>

namespace parthom {

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& mu : partitions_of(n)) values_.emplace(mu, Rational(0));
}

ClassFunction ClassFunction::from_symfunc(const SymFunc& f, int n) {
  ClassFunction chi(n);
  const SymFunc fp = convert(f, Basis::p).homogeneous_part(n);
  // <p_lambda, p_mu> = z_mu [lambda = mu].
  for (const auto& [mu, c] : fp.terms()) chi.values_[mu] = c * mu.z();
  return chi;
}

const Rational& ClassFunction::at(const IntPartition& cycle_type) const {
  auto it = values_.find(cycle_type);
  if (it == values_.end()) throw std::out_of_range(cycle_type.to_string() + " is not a cycle type of S_" + std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const IntPartition& cycle_type, Rational value) {
  auto it = values_.find(cycle_type);
  if (it == values_.end()) throw std::out_of_range(cycle_type.to_string() + " is not a cycle type of S_" + std::to_string(n_));
  it->second = std::move(value);
}

SymFunc ClassFunction::frobenius() const {
  SymFunc f(Basis::p);
  for (const auto& [mu, v] : values_) f.add_term(mu, v / mu.z());
  return f;
}

bool ClassFunction::vanishes_off_involutions() const {
  for (const auto& [mu, v] : values_) {
    if (!mu.empty() && mu[0] >= 3 && sgn(v) != 0) return false;
  }
  return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("class functions on different symmetric groups");
  for (auto& [mu, v] : values_) v += other.values_.at(mu);
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (auto& [mu, v] : values_) v *= c;
  return *this;
}

}  // namespace parthom
