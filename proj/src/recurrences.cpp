// SPDX-License-Identifier: Apache-2.0
#include "polycount/recurrences.hpp"

#include <string>

#include "polycount/errors.hpp"

namespace polycount {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string str(long v) { return std::to_string(v); }

void require_positive_s(int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
}

void require_k(int k) {
  if (k < 2) throw ParameterError("polymer length k must be at least 2");
}

Int alternating_diagonal(int k, int s, int n, int m, int terms, CountSource& counts) {
  Int acc = 0;
  for (int i = 0; i <= terms; ++i) acc += neg_one_pow(i) * binom(terms, i) * counts.count({n - i, m - i, k}, s);
  return acc;
}

Report diagonal_report(const char* name, int k, int s, const std::vector<DiagonalPoint>& points,
                       CountSource& counts, bool unsafe_range, int shift, const Int& target) {
  require_k(k);
  require_positive_s(s);
  const int bound = diagonal_lower_bound(k, s) + shift;
  const int terms = 2 * s + shift;
  Report rep;
  rep.title = name;
  for (auto [n, m] : points) {
    const bool in_range = n >= bound && m >= bound;
    if (!in_range && !unsafe_range)
      throw RangeError(std::string(name) + ": (" + str(n) + "," + str(m) + ") below n,m >= " + str(bound));
    if (n - terms < 1 || m - terms < 1)
      throw RangeError(std::string(name) + ": window leaves the lattice at (" + str(n) + "," + str(m) + ")");
    Int sum = alternating_diagonal(k, s, n, m, terms, counts);
    CheckRecord rec{name,
                    {{"k", str(k)}, {"s", str(s)}, {"n", str(n)}, {"m", str(m)}},
                    to_string(target),
                    to_string(sum),
                    sum == target ? Status::pass : Status::fail,
                    "residual " + to_string(Int(sum - target))};
    if (!in_range) rec.status = Status::unchecked;
    rep.add(std::move(rec));
  }
  return rep;
}

}  // namespace

Int strip_constant(int n, int k) {
  require_k(k);
  if (n < k) throw RangeError("strip constant requires n >= k");
  return Int(2 * n - k + 1);
}

Int diagonal_rhs(int s) {
  if (s < 0) throw ParameterError("s must be nonnegative");
  return ipow(Int(2), s) * factorial(2 * s) / factorial(s);
}

std::vector<DiagonalPoint> square_points(int lo, int hi) {
  std::vector<DiagonalPoint> out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, n);
  return out;
}

std::vector<DiagonalPoint> grid_points(int n_lo, int n_hi, int m_lo, int m_hi) {
  std::vector<DiagonalPoint> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int m = m_lo; m <= m_hi; ++m) out.emplace_back(n, m);
  return out;
}

Report verify_strip(int k, int n, int s, int m_lo, int m_hi, CountSource& counts) {
  require_k(k);
  if (s < 0) throw ParameterError("s must be nonnegative");
  const Int rhs = ipow(strip_constant(n, k), s);
  if (m_lo < k * s) throw RangeError("strip recurrence requires m >= k*s, got m = " + str(m_lo));
  Report rep;
  rep.title = "strip";
  for (int m = m_lo; m <= m_hi; ++m) {
    Int sum = 0;
    for (int i = 0; i <= s; ++i) sum += neg_one_pow(i) * binom(s, i) * counts.count({n, m - i, k}, s);
    rep.add(CheckRecord{"strip",
                        {{"k", str(k)}, {"n", str(n)}, {"s", str(s)}, {"m", str(m)}},
                        to_string(rhs),
                        to_string(sum),
                        sum == rhs ? Status::pass : Status::fail,
                        "residual " + to_string(Int(sum - rhs))});
  }
  return rep;
}

Report verify_diagonal(int k, int s, const std::vector<DiagonalPoint>& points, CountSource& counts,
                       bool unsafe_range) {
  return diagonal_report("diagonal", k, s, points, counts, unsafe_range, 0, diagonal_rhs(s));
}

Report verify_diagonal_corollary(int k, int s, const std::vector<DiagonalPoint>& points, CountSource& counts,
                                 bool unsafe_range) {
  return diagonal_report("corollary", k, s, points, counts, unsafe_range, 1, Int(0));
}

void DiagonalSeed::validate(bool unsafe_range) const {
  require_k(k);
  require_positive_s(s);
  if (window.size() != static_cast<std::size_t>(2 * s))
    throw ParameterError("seed window must hold 2s = " + str(2 * s) + " values, got " + str(window.size()));
  const int lowest_n = n0 - (2 * s - 1), lowest_m = m0 - (2 * s - 1);
  if (lowest_n < 1 || lowest_m < 1) throw RangeError("seed window leaves the lattice");
  const int bound = diagonal_lower_bound(k, s);
  if (!unsafe_range && (lowest_n < bound || lowest_m < bound))
    throw RangeError("seed window reaches (" + str(lowest_n) + "," + str(lowest_m) + "), below n,m >= " +
                     str(bound));
}

DiagonalSeed make_seed(int k, int s, int n0, int m0, CountSource& counts, bool unsafe_range) {
  DiagonalSeed seed{k, s, n0, m0, {}};
  seed.window.resize(std::max(0, 2 * s));
  // Validate the range before enumerating anything.
  seed.validate(unsafe_range);
  for (int i = 0; i < 2 * s; ++i) seed.window[i] = counts.count({n0 - i, m0 - i, k}, s);
  return seed;
}

std::vector<Int> extend_diagonal(const DiagonalSeed& seed, int steps, bool unsafe_range) {
  seed.validate(unsafe_range);
  if (steps < 1) throw ParameterError("steps must be positive");
  const int s = seed.s;
  const Int rhs = diagonal_rhs(s);
  std::vector<Int> coeff(2 * s + 1);
  for (int i = 0; i <= 2 * s; ++i) coeff[i] = neg_one_pow(i) * binom(2 * s, i);

  std::vector<Int> win = seed.window;  // newest first
  std::vector<Int> out;
  for (int t = 1; t <= steps; ++t) {
    Int next = rhs;
    for (int i = 1; i <= 2 * s; ++i) next -= coeff[i] * win[i - 1];
    out.push_back(next);
    win.insert(win.begin(), next);
    win.pop_back();
  }
  return out;
}

Int diagonal_residual(int s, const std::vector<Int>& newest_first) {
  if (newest_first.size() != static_cast<std::size_t>(2 * s + 1))
    throw ParameterError("residual needs 2s+1 values");
  Int acc = 0;
  for (int i = 0; i <= 2 * s; ++i) acc += neg_one_pow(i) * binom(2 * s, i) * newest_first[i];
  return acc - diagonal_rhs(s);
}

}  // namespace polycount
