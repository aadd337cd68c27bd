#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parthom/int_partition.hpp"
#include "parthom/rational.hpp"

namespace parthom {

enum class Basis { p, h, e, m, s };

std::string_view basis_name(Basis b);
/// Accepts "p", "h", "e", "m", "s"; throws std::invalid_argument otherwise.
Basis parse_basis(std::string_view name);

/// A finite linear combination of basis elements with exact rational
/// coefficients. Zero coefficients are never stored. Terms are kept in the
/// canonical partition order (by weight, then decreasing lexicographic).
///
/// Arithmetic is carried out in the power-sum basis; other bases are used for
/// input and output. Equality compares the underlying symmetric functions, so
/// h_2 == s_(2) holds even though the bases differ.
class SymFunc {
 public:
  using Terms = std::map<IntPartition, Rational, CanonicalOrder>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc zero(Basis basis = Basis::p) { return SymFunc(basis); }
  static SymFunc one() { return term(Basis::p, IntPartition(), 1); }
  static SymFunc term(Basis basis, IntPartition lambda, Rational coeff = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const IntPartition& lambda) const;
  void add_term(const IntPartition& lambda, const Rational& coeff);

  /// The common degree of all terms, or nullopt when mixed (0 for the zero function).
  std::optional<int> degree() const;
  int max_degree() const;
  int min_degree() const;
  SymFunc homogeneous_part(int d) const;
  SymFunc truncated(int max_degree) const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= Rational(-1); }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b);

  /// Human-readable form such as "3*h(2,1) - h(3)".
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

// Basis element constructors.
SymFunc power_sum(int k);
SymFunc power_sum(const IntPartition& lambda);
SymFunc complete(int k);
SymFunc complete(const IntPartition& lambda);
SymFunc elementary(int k);
SymFunc elementary(const IntPartition& lambda);
SymFunc monomial(const IntPartition& lambda);
SymFunc schur(const IntPartition& lambda);

/// The same symmetric function expressed in `target`.
SymFunc convert(const SymFunc& f, Basis target);

/// Product, returned in the power-sum basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
/// Product with every term of degree above `max_degree` dropped.
SymFunc multiply(const SymFunc& f, const SymFunc& g, int max_degree);

/// Thrown when a plethysm f[g] would need infinitely many terms.
class PlethysmDivergence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f[g] truncated to total degree <= max_degree, via p_k[g] = g|_{p_i -> p_ik}.
/// Throws PlethysmDivergence if g has a nonzero constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree);

/// The degree-n component of f[h_1 + h_2 + h_3 + ...].
SymFunc plethysm_with_H(const SymFunc& f, int n);

/// Hall inner product: <p_lambda, p_mu> = z_lambda [lambda = mu].
Rational inner_product(const SymFunc& f, const SymFunc& g);

/// Skewing by s_mu: the adjoint of multiplication by s_mu.
SymFunc skew(const SymFunc& f, const IntPartition& mu);

/// The involution p_k -> (-1)^(k-1) p_k; on modules, tensoring with the sign
/// representation. h-input comes back in e, s-input stays in s.
SymFunc sign_twist(const SymFunc& f);

/// Formal partial derivative in p_1 (restriction from S_n to S_{n-1}).
SymFunc d_dp1(const SymFunc& f);

struct PositivityCertificate {
  Basis basis = Basis::s;
  bool positive = true;          // every coefficient a nonnegative integer
  SymFunc coefficients;          // f expanded in `basis`
  std::vector<IntPartition> violations;  // indices with negative or fractional coefficients
};

/// Checks h- or s-positivity (nonnegative integer coefficients).
PositivityCertificate positivity(const SymFunc& f, Basis basis);

/// s_(n-k,1^k) as the alternating sum sum_{i=0}^k (-1)^(k-i) h_{n-i} e_i.
SymFunc hook_schur(int n, int k);

/// Value of f at p_1 = x, p_k = 0 for k > 1, times n!: for a degree-n
/// Frobenius characteristic this is the module dimension.
Rational dimension(const SymFunc& f);

}  // namespace parthom
