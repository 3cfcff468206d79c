// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "polycount/lattice_enum.hpp"
#include "polycount/numeric.hpp"
#include "polycount/report.hpp"

namespace polycount {

// Site (i, j) is lattice cell (n - i, m - j) inside the (2s+1) x (2s+1) square.
// A vertical identity at (i, j) covers (i, j + l), a horizontal one covers
// (i + l, j), l = 0..s, with coefficient (-1)^l C(s, l).
enum class Orientation { vertical, horizontal };
enum class IdentitySet { p1, p2 };

const char* to_string(Orientation o);
const char* to_string(IdentitySet t);

struct PlacedIdentity {
  Orientation orientation = Orientation::vertical;
  int i = 0;
  int j = 0;
  IdentitySet set = IdentitySet::p1;
  Int weight;
};

using CoeffGrid = std::vector<std::vector<Int>>;

struct WeightGrid {
  int s = 0;
  std::vector<PlacedIdentity> placements;
  CoeffGrid gamma;  // accumulated coefficient of a(n - i, m - j)

  int side() const { return 2 * s + 1; }
  std::size_t count(IdentitySet set, Orientation o) const;
};

WeightGrid build_weight_grid(int s);

CoeffGrid accumulate_lhs(const WeightGrid& grid, std::optional<IdentitySet> set = std::nullopt,
                         std::optional<Orientation> orientation = std::nullopt);

// 2 (-1)^i C(2s, i) on the diagonal, 0 elsewhere.
Int lhs_target(int s, int i, int j);

// Coefficients induced by P1 alone.
Int alpha_v(int s, int i, int j);
Int alpha_h(int s, int i, int j);
Int alpha_p1(int s, int i, int j);

struct RhsModel {
  Rat lambda = 2;
  Rat eta = -1;
  int s = 1;
  long n = 0;  // anchor; must be at least 2s + 1
};

// Sum over vertical identities of weight * (lambda (n - i) + eta)^s.
Rat accumulate_rhs(const WeightGrid& grid, const RhsModel& model);
// Same over horizontal identities with (lambda (m - j) + eta)^s.
Rat accumulate_rhs_horizontal(const WeightGrid& grid, const Rat& lambda, const Rat& eta, long m);
// lambda^s C(2s, s) s!
Rat rhs_target(int s, const Rat& lambda);

// Cancellation, alpha formula, RHS and column sums for one model.
Report verify_weights(const RhsModel& model);

// sum_{i=0}^{s} (-1)^{i+s} i^{s+1-t} C(s, i)
Int stirling_sum(int s, int t);
// s (s+1)! / 2, s!, 0 for t = 0, 1, > 1.
Int stirling_target(int s, int t);

Report verify_rhs_column_sums(int s);

// Contribution of term 1, 2 or 3 of the explicit h formula to the P2
// coefficient of cell (i, j), from vertical or horizontal identities.
Rat beta_v_term(int term, int s, int i, int j);
Rat beta_h_term(int term, int s, int i, int j);

// Double sum U(s, i, j) from the upper-left triangle of the third quadrant.
Rat double_sum_u(int s, int i, int j);

// Closed forms for the fourth quadrant as displayed; each equals the negative
// of the corresponding per-term coefficient.
Rat q4_beta2h_display(int s, int i, int j);
Rat q4_beta3v_display(int s, int i, int j);

enum class Region { q1, q2, q3, q4 };
const char* to_string(Region r);
// Q3 = [s,2s]^2, Q1 = [0,s]^2 minus (s,s), Q4 = i < s < j, Q2 = j < s < i.
Region region_of(int s, int i, int j);

Report verify_quadrant_lemmas(int s);

// Evaluates every placed identity on real counts (strip constant 2x - k + 1)
// and checks the weighted sums against twice the diagonal recurrence.
Report verify_end_to_end(int k, int s, int n, int m, CountSource& counts);

}  // namespace polycount
