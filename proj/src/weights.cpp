// SPDX-License-Identifier: Apache-2.0
#include "polycount/weights.hpp"

#include <algorithm>
#include <string>

#include "polycount/errors.hpp"
#include "polycount/hseq.hpp"
#include "polycount/recurrences.hpp"

namespace polycount {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string str(long v) { return std::to_string(v); }

void require_s(int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
}

Inputs sij(int s, int i, int j) { return {{"s", str(s)}, {"i", str(i)}, {"j", str(j)}}; }

void expect(Report& rep, const std::string& name, Inputs in, const Rat& want, const Rat& got) {
  rep.add(name, std::move(in), to_string(want), to_string(got), want == got);
}

}  // namespace

const char* to_string(Orientation o) { return o == Orientation::vertical ? "vertical" : "horizontal"; }
const char* to_string(IdentitySet t) { return t == IdentitySet::p1 ? "P1" : "P2"; }

const char* to_string(Region r) {
  switch (r) {
    case Region::q1:
      return "q1";
    case Region::q2:
      return "q2";
    case Region::q3:
      return "q3";
    case Region::q4:
      return "q4";
  }
  return "?";
}

std::size_t WeightGrid::count(IdentitySet set, Orientation o) const {
  return static_cast<std::size_t>(std::count_if(placements.begin(), placements.end(), [&](const PlacedIdentity& p) {
    return p.set == set && p.orientation == o;
  }));
}

WeightGrid build_weight_grid(int s) {
  require_s(s);
  WeightGrid g;
  g.s = s;
  std::vector<PlacedIdentity> vert;
  for (int i = 0; i <= 2 * s; ++i) {
    int lo = i <= s ? 0 : i - s;
    int hi = i <= s ? i : s;
    for (int j = lo; j <= hi; ++j)
      vert.push_back({Orientation::vertical, i, j, IdentitySet::p1, neg_one_pow(j) * binom(s, j)});
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j <= s; ++j)
      vert.push_back({Orientation::vertical, i, j, IdentitySet::p2, h_recursive(s, i, j).value});
  for (int i = s + 1; i <= 2 * s; ++i)
    for (int j = 0; j < i - s; ++j)
      vert.push_back(
          {Orientation::vertical, i, j, IdentitySet::p2, neg_one_pow(s) * h_recursive(s, 2 * s - i, s - j).value});

  g.placements = vert;
  for (const auto& p : vert) g.placements.push_back({Orientation::horizontal, p.j, p.i, p.set, p.weight});
  g.gamma = accumulate_lhs(g);
  return g;
}

CoeffGrid accumulate_lhs(const WeightGrid& grid, std::optional<IdentitySet> set,
                         std::optional<Orientation> orientation) {
  const int s = grid.s, side = grid.side();
  CoeffGrid out(side, std::vector<Int>(side));
  std::vector<Int> row(s + 1);
  for (int l = 0; l <= s; ++l) row[l] = neg_one_pow(l) * binom(s, l);
  for (const auto& p : grid.placements) {
    if (set && p.set != *set) continue;
    if (orientation && p.orientation != *orientation) continue;
    for (int l = 0; l <= s; ++l) {
      int i = p.i, j = p.j;
      (p.orientation == Orientation::vertical ? j : i) += l;
      if (i >= side || j >= side) throw std::logic_error("identity footprint leaves the square");
      out[i][j] += p.weight * row[l];
    }
  }
  return out;
}

Int lhs_target(int s, int i, int j) { return i == j ? Int(2 * neg_one_pow(i) * binom(2 * s, i)) : Int(0); }

Int alpha_v(int s, int i, int j) {
  const int lo = std::max({0, i - s, j - s}), hi = std::min({s, i, j});
  Int acc = 0;
  for (int jp = lo; jp <= hi; ++jp) acc += binom(s, jp) * binom(s, j - jp);
  return neg_one_pow(j) * acc;
}

Int alpha_h(int s, int i, int j) { return alpha_v(s, j, i); }

Int alpha_p1(int s, int i, int j) {
  require_s(s);
  if (i < 0 || j < 0 || i > 2 * s || j > 2 * s) throw ParameterError("alpha_p1: cell outside the square");
  return alpha_v(s, i, j) + alpha_h(s, i, j);
}

Rat accumulate_rhs(const WeightGrid& grid, const RhsModel& model) {
  if (model.s != grid.s) throw ParameterError("model and grid disagree on s");
  if (model.n < 2L * grid.s + 1) throw ParameterError("anchor n must be at least 2s + 1");
  Rat acc = 0;
  for (const auto& p : grid.placements)
    if (p.orientation == Orientation::vertical) acc += Rat(p.weight) * rpow(model.lambda * (model.n - p.i) + model.eta, grid.s);
  return acc;
}

Rat accumulate_rhs_horizontal(const WeightGrid& grid, const Rat& lambda, const Rat& eta, long m) {
  if (m < 2L * grid.s + 1) throw ParameterError("anchor m must be at least 2s + 1");
  Rat acc = 0;
  for (const auto& p : grid.placements)
    if (p.orientation == Orientation::horizontal) acc += Rat(p.weight) * rpow(lambda * (m - p.j) + eta, grid.s);
  return acc;
}

Rat rhs_target(int s, const Rat& lambda) { return rpow(lambda, s) * Rat(binom(2 * s, s) * factorial(s)); }

Report verify_weights(const RhsModel& model) {
  const int s = model.s;
  WeightGrid grid = build_weight_grid(s);
  Report rep;
  rep.title = "weights";
  const auto p1 = accumulate_lhs(grid, IdentitySet::p1);
  for (int i = 0; i <= 2 * s; ++i)
    for (int j = 0; j <= 2 * s; ++j) {
      expect(rep, "weights/cancellation", sij(s, i, j), lhs_target(s, i, j), grid.gamma[i][j]);
      expect(rep, "weights/alpha-p1", sij(s, i, j), alpha_p1(s, i, j), p1[i][j]);
    }
  Inputs in{{"s", str(s)}, {"lambda", to_string(model.lambda)}, {"eta", to_string(model.eta)}, {"n", str(model.n)}};
  expect(rep, "weights/rhs", in, rhs_target(s, model.lambda), accumulate_rhs(grid, model));
  expect(rep, "weights/rhs-horizontal", in, rhs_target(s, model.lambda),
         accumulate_rhs_horizontal(grid, model.lambda, model.eta, model.n));
  rep.merge(verify_rhs_column_sums(s));
  return rep;
}

Int stirling_sum(int s, int t) {
  if (s < 1 || t < 0 || t > s + 1) throw ParameterError("stirling_sum: need s >= 1, 0 <= t <= s+1");
  Int acc = 0;
  for (int i = 0; i <= s; ++i) acc += neg_one_pow(i + s) * ipow(Int(i), s + 1 - t) * binom(s, i);
  return acc;
}

Int stirling_target(int s, int t) {
  if (t == 0) return Int(s) * factorial(s + 1) / 2;
  if (t == 1) return factorial(s);
  return 0;
}

Report verify_rhs_column_sums(int s) {
  require_s(s);
  WeightGrid grid = build_weight_grid(s);
  Report rep;
  rep.title = "rhs-column-sums";
  std::vector<Int> p1(2 * s + 1), p2(2 * s + 1);
  for (const auto& p : grid.placements) {
    if (p.orientation != Orientation::vertical) continue;
    (p.set == IdentitySet::p1 ? p1 : p2)[p.i] += p.weight;
  }
  const Rat factor = frac(binom(2 * s, s - 1), s) - 1;
  for (int i = 0; i <= 2 * s; ++i) {
    Int x = i <= s ? Int(neg_one_pow(i) * binom(s - 1, i)) : Int(neg_one_pow(s + i) * binom(s - 1, 2 * s - i));
    Inputs in{{"s", str(s)}, {"i", str(i)}};
    expect(rep, "rhs/p1-column", in, x, p1[i]);
    expect(rep, "rhs/p2-column", in, Rat(x) * factor, p2[i]);
    if (i < s) {
      Rat y2 = 0, y3 = 0;
      for (int j = i + 1; j <= s; ++j) {
        y2 += h_term(2, s, i, j);
        y3 += h_term(3, s, i, j);
      }
      expect(rep, "rhs/p2-second-term", in, Rat(neg_one_pow(i + 1) * binom(2 * s, i) * binom(2 * s - i, s + 1)), y2);
      Rat y3_closed = Rat(neg_one_pow(i) * (2 * s - i) * binom(2 * s, i) * binom(2 * s - i - 1, s)) / s *
                      (1 - frac(1, 2 * binom(2 * s - 1, s)));
      expect(rep, "rhs/p2-third-term", in, y3_closed, y3);
    }
  }
  for (int t = 0; t <= s + 1; ++t)
    expect(rep, "rhs/stirling", {{"s", str(s)}, {"t", str(t)}}, stirling_target(s, t), stirling_sum(s, t));
  return rep;
}

Rat beta_v_term(int term, int s, int i, int j) {
  Rat acc = 0;
  for (int jp = 0; jp <= s; ++jp) {
    Rat c(neg_one_pow(j - jp) * binom(s, j - jp));
    if (c == 0) continue;
    acc += c * (i <= s ? h_term(term, s, i, jp) : h_term(term, s, 2 * s - i, s - jp));
  }
  return i <= s ? acc : acc * neg_one_pow(s);
}

Rat beta_h_term(int term, int s, int i, int j) { return beta_v_term(term, s, j, i); }

Rat double_sum_u(int s, int i, int j) {
  Rat acc = 0;
  for (int jp = 0; jp <= s; ++jp)
    for (int t = 1; t <= s - jp; ++t)
      acc += frac(neg_one_pow(jp + t + 1) * binom(i - jp - 1, s + t - 1) * binom(s, t - 1) * binom(s, j - jp),
                  t * binom(s - jp, t));
  return Rat(neg_one_pow(s + i + j) * i * binom(2 * s, i)) * acc;
}

Rat q4_beta2h_display(int s, int i, int j) {
  Int acc = 0;
  for (int ip = 0; ip <= s; ++ip) acc += neg_one_pow(ip) * binom(j - ip - 1, s) * binom(s, i - ip);
  return Rat(neg_one_pow(s + i + j) * binom(2 * s, j) * acc);
}

Rat q4_beta3v_display(int s, int i, int j) {
  Rat acc = 0;
  for (int jp = 0; jp <= s; ++jp)
    for (int t = 0; t <= i; ++t)
      acc += frac(neg_one_pow(t + jp) * binom(i, t) * binom(s - t - 1 + jp, jp) * binom(s, j - jp), 2 * s - t);
  return Rat(neg_one_pow(i + j + 1) * (2 * s - i) * binom(2 * s, i)) * acc;
}

Region region_of(int s, int i, int j) {
  if (i >= s && j >= s) return Region::q3;
  if (i <= s && j <= s) return Region::q1;
  return i < s ? Region::q4 : Region::q2;
}

Report verify_quadrant_lemmas(int s) {
  require_s(s);
  WeightGrid grid = build_weight_grid(s);
  const auto p2v = accumulate_lhs(grid, IdentitySet::p2, Orientation::vertical);
  const auto p2h = accumulate_lhs(grid, IdentitySet::p2, Orientation::horizontal);
  Report rep;
  rep.title = "quadrants";

  for (int i = 0; i <= 2 * s; ++i)
    for (int j = 0; j <= 2 * s; ++j) {
      const Region reg = region_of(s, i, j);
      // Work in the orientation where the cell lies on or above the diagonal
      // (j >= i); the other half follows by swapping roles.
      const bool swapped = i > j;
      const int a = swapped ? j : i, b = swapped ? i : j;
      auto bv = [&](int t) { return swapped ? beta_h_term(t, s, i, j) : beta_v_term(t, s, i, j); };
      auto bh = [&](int t) { return swapped ? beta_v_term(t, s, i, j) : beta_h_term(t, s, i, j); };
      const Rat av = swapped ? alpha_h(s, i, j) : alpha_v(s, i, j);
      const Rat ah = swapped ? alpha_v(s, i, j) : alpha_h(s, i, j);
      Inputs in = sij(s, i, j);
      in.emplace_back("region", to_string(reg));
      const std::string pre = std::string(to_string(reg)) + "/";

      // Per-term formulas reproduce the accumulation from placements.
      Rat tv = beta_v_term(1, s, i, j) + beta_v_term(2, s, i, j) + beta_v_term(3, s, i, j);
      Rat th = beta_h_term(1, s, i, j) + beta_h_term(2, s, i, j) + beta_h_term(3, s, i, j);
      expect(rep, "beta/vertical-per-term-vs-placements", in, Rat(p2v[i][j]), tv);
      expect(rep, "beta/horizontal-per-term-vs-placements", in, Rat(p2h[i][j]), th);
      const Rat total_far = swapped ? tv : th;

      if (reg == Region::q1) {
        if (a == b) {
          expect(rep, pre + "p1-diagonal", in, Rat(2 * neg_one_pow(i) * binom(2 * s, i)), Rat(alpha_p1(s, i, j)));
          expect(rep, pre + "beta-diagonal", in, 0, tv + th);
        } else {
          expect(rep, pre + "alpha-plus-beta1", in, 0, av + bv(1));
          expect(rep, pre + "alpha-cross-plus-beta2", in, 0, ah + bv(2));
          expect(rep, pre + "beta3", in, 0, bv(3));
          expect(rep, pre + "cross-beta-total", in, 0, total_far);
        }
      } else if (reg == Region::q3) {
        const int hi = std::max(i, j), lo = std::min(i, j);
        if (a == b) {
          const Rat c(neg_one_pow(i) * binom(2 * s, i));
          expect(rep, pre + "diagonal-beta1", in, -c, beta_v_term(1, s, i, i));
          expect(rep, pre + "diagonal-beta2", in, 0, beta_v_term(2, s, i, i));
          expect(rep, pre + "diagonal-beta3", in, c, beta_v_term(3, s, i, i));
          expect(rep, pre + "diagonal-alpha-plus-beta1", in, 0, alpha_v(s, i, i) + beta_v_term(1, s, i, i));
          expect(rep, pre + "double-sum-vanishes", in, 0, double_sum_u(s, i, i));
        } else {
          const Rat c(neg_one_pow(hi) * binom(2 * s, hi));
          // Below the diagonal the vertical identities are the near family;
          // above it the transpose swaps them.
          auto near = [&](int t) { return i > j ? beta_v_term(t, s, i, j) : beta_h_term(t, s, i, j); };
          const Rat a_near = i > j ? alpha_v(s, i, j) : alpha_h(s, i, j);
          const Rat a_far = i > j ? alpha_h(s, i, j) : alpha_v(s, i, j);
          const Rat far_total = i > j ? th : tv;
          expect(rep, pre + "alpha-plus-beta1", in, 0, a_near + near(1));
          expect(rep, pre + "alpha-cross", in, c, a_far);
          expect(rep, pre + "beta2", in, -c, near(2));
          expect(rep, pre + "alpha-cross-plus-beta2", in, 0, a_far + near(2));
          expect(rep, pre + "beta3", in, 0, near(3));
          expect(rep, pre + "cross-beta-total", in, 0, far_total);
          expect(rep, pre + "double-sum", in, Rat(neg_one_pow(lo + 1) * binom(2 * s, lo)), double_sum_u(s, hi, lo));
          expect(rep, pre + "beta3-via-double-sum", in,
                 Rat(neg_one_pow(lo) * binom(2 * s, lo)) + double_sum_u(s, hi, lo), near(3));
        }
        if (i >= j && i < 2 * s) {
          Rat g = double_sum_u(s, i + 1, j) - double_sum_u(s, i, j);
          Rat want = i == j ? Rat(neg_one_pow(j + 1) * binom(2 * s, i)) : Rat(0);
          expect(rep, pre + "inhomogeneous-term", in, want, g);
        }
      } else {
        // Q4 (i < s < j) and its transpose Q2.
        expect(rep, pre + "alpha-plus-beta1", in, 0, av + bv(1));
        expect(rep, pre + "alpha-cross-plus-beta1-cross", in, 0, ah + bh(1));
        expect(rep, pre + "beta2-plus-beta3-cross", in, 0, bv(2) + bh(3));
        expect(rep, pre + "beta2-cross-plus-beta3", in, 0, bh(2) + bv(3));
        expect(rep, pre + "beta2-cross-display", in, -q4_beta2h_display(s, a, b), bh(2));
        expect(rep, pre + "beta3-display", in, -q4_beta3v_display(s, a, b), bv(3));
      }
      expect(rep, pre + "total", in, Rat(lhs_target(s, i, j)), Rat(grid.gamma[i][j]));
    }
  return rep;
}

Report verify_end_to_end(int k, int s, int n, int m, CountSource& counts) {
  require_s(s);
  const int need = std::max(2 * s + k, (k + 1) * s);
  if (n < need || m < need)
    throw RangeError("end-to-end check needs n, m >= " + str(need) + " for every strip identity");
  WeightGrid grid = build_weight_grid(s);
  Report rep;
  rep.title = "end-to-end";
  Int lhs_total = 0, rhs_total = 0;
  for (const auto& p : grid.placements) {
    const bool vert = p.orientation == Orientation::vertical;
    const int width = vert ? n - p.i : m - p.j;
    Int lhs = 0;
    for (int l = 0; l <= s; ++l) {
      LatticeSpec spec = vert ? LatticeSpec{n - p.i, m - p.j - l, k} : LatticeSpec{n - p.i - l, m - p.j, k};
      lhs += neg_one_pow(l) * binom(s, l) * counts.count(spec, s);
    }
    Int rhs = ipow(strip_constant(width, k), s);
    rep.add("end-to-end/identity",
            {{"k", str(k)}, {"s", str(s)}, {"n", str(n)}, {"m", str(m)}, {"orientation", to_string(p.orientation)},
             {"i", str(p.i)}, {"j", str(p.j)}},
            to_string(rhs), to_string(lhs), lhs == rhs);
    lhs_total += p.weight * lhs;
    rhs_total += p.weight * rhs;
  }
  Int diag = 0;
  for (int i = 0; i <= 2 * s; ++i) diag += neg_one_pow(i) * binom(2 * s, i) * counts.count({n - i, m - i, k}, s);
  Inputs in{{"k", str(k)}, {"s", str(s)}, {"n", str(n)}, {"m", str(m)}};
  rep.add("end-to-end/weighted-lhs", in, to_string(Int(2 * diag)), to_string(lhs_total), lhs_total == 2 * diag);
  Int target = 2 * diagonal_rhs(s);
  rep.add("end-to-end/weighted-rhs", in, to_string(target), to_string(rhs_total), rhs_total == target);
  rep.add("end-to-end/diagonal", in, to_string(diagonal_rhs(s)), to_string(diag), diag == diagonal_rhs(s));
  return rep;
}

}  // namespace polycount
