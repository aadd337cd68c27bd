#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parthom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal form "a" or "a/b" with b > 0 and gcd(a, b) = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input or b = 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n

}  // namespace parthom
