// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "polycount/lattice_enum.hpp"
#include "polycount/numeric.hpp"
#include "polycount/report.hpp"

namespace polycount {

// c(n, k) = 2n - k + 1, defined for n >= k.
Int strip_constant(int n, int k);

// 2^s (2s)! / s!
Int diagonal_rhs(int s);

// Smallest n (and m) covered by the diagonal recurrence: (k+1)s.
inline int diagonal_lower_bound(int k, int s) { return (k + 1) * s; }

using DiagonalPoint = std::pair<int, int>;

// Square points (n, n) for n in [lo, hi].
std::vector<DiagonalPoint> square_points(int lo, int hi);
// All (n, m) with n in [n_lo, n_hi], m in [m_lo, m_hi].
std::vector<DiagonalPoint> grid_points(int n_lo, int n_hi, int m_lo, int m_hi);

// sum_{i=0}^{s} (-1)^i C(s,i) a(n, m-i, k, s) = c(n,k)^s for each m in [m_lo, m_hi].
Report verify_strip(int k, int n, int s, int m_lo, int m_hi, CountSource& counts);

// sum_{i=0}^{2s} (-1)^i C(2s,i) a(n-i, m-i, k, s) = 2^s (2s)!/s!.
// With unsafe_range, points below the bound are reported as unchecked
// instead of rejected.
Report verify_diagonal(int k, int s, const std::vector<DiagonalPoint>& points, CountSource& counts,
                       bool unsafe_range = false);

// The (2s+1)-term alternating sum vanishes for n, m >= (k+1)s + 1.
Report verify_diagonal_corollary(int k, int s, const std::vector<DiagonalPoint>& points, CountSource& counts,
                                 bool unsafe_range = false);

struct DiagonalSeed {
  int k = 2;
  int s = 1;
  int n0 = 0;
  int m0 = 0;
  // window[i] = a(n0 - i, m0 - i, k, s) for i = 0 .. 2s-1.
  std::vector<Int> window;

  void validate(bool unsafe_range = false) const;  // throws ParameterError / RangeError
};

DiagonalSeed make_seed(int k, int s, int n0, int m0, CountSource& counts, bool unsafe_range = false);

// Values a(n0 + t, m0 + t) for t = 1..steps.
std::vector<Int> extend_diagonal(const DiagonalSeed& seed, int steps, bool unsafe_range = false);

// sum_{i=0}^{2s} (-1)^i C(2s,i) w[i] - 2^s (2s)!/s!, where w[i] = a(n - i, m - i).
Int diagonal_residual(int s, const std::vector<Int>& newest_first);

}  // namespace polycount
