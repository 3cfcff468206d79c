// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polycount/numeric.hpp"
#include "polycount/series.hpp"

namespace polycount {

// Value of h_{s,i,j}. `defined` is false outside 0 <= i <= s-1, 1 <= j <= s,
// in which case value is 0.
struct HValue {
  Int value;
  bool defined = false;
};

bool h_in_domain(int s, int i, int j);

HValue h_recursive(int s, int i, int j);
HValue h_explicit(int s, int i, int j);

// One of the three terms of the explicit formula, evaluated at any integer
// point with 0 <= i <= 2s. The second term carries [s+j-i-1 >= 0].
Rat h_term(int term, int s, long i, long j);
// h_term(1) + h_term(2) + h_term(3), no domain check.
Rat h_extended(int s, long i, long j);

// Truncated series H_{s,i}(x) from the closed form, to order `order`.
Series h_gf_series(int s, int i, int order);
// Coefficients of x^1..x^j_max of H_{s,i}.
std::vector<Int> h_from_gf(int s, int i, int j_max);

// grid[i][j] = coefficient of z^i x^j, 0 <= i <= i_max, 0 <= j <= j_max.
std::vector<std::vector<Int>> h_from_double_gf(int s, int i_max, int j_max);

// Sum of h_{s,i,j} over 0 <= i <= j-1.
Int column_sum(int s, int j);
Int column_sum_closed_form(int s, int j);

// Checks H_i = -(s x / i - 1) H_{i-1} + x (x - 1) / i * H'_{i-1} coefficientwise
// up to x^order for i = 1..s-1. Returns the first failing i, or 0.
int gf_recursion_first_failure(int s, int order);

}  // namespace polycount
