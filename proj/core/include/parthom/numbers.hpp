#pragma once

#include "parthom/rational.hpp"

namespace parthom {

/// Euler zigzag number E_n (coefficients of tan x + sec x times n!).
Integer euler_number(int n);

/// Simsun numbers a_i(n): a_i(n+1) = i a_i(n) + (n-2i+2) a_{i-1}(n),
/// a_0(1) = a_1(2) = 1, a_0(n) = 0 for n > 1, zero when 2i > n.
Integer simsun(int i, int n);

/// b_i(n), 2 <= i <= n, from the double-sum recurrence with b_2(n) = 1;
/// zero outside that range. Throws std::logic_error if a value is not positive.
Integer bi(int i, int n);

/// E_k(n) = sum_i b_i(n) C(n-i, k-i).
Integer even_refinement(int k, int n);

}  // namespace parthom
