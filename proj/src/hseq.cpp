// SPDX-License-Identifier: Apache-2.0
#include "polycount/hseq.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "polycount/errors.hpp"

namespace polycount {

namespace {

void require_s(int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
}

Rat h_rec_rat(int s, int i, int j, std::map<std::pair<int, int>, Rat>& memo) {
  if (j <= i) return 0;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rat v;
  if (i == 0) {
    v = binom(Rat(s + j - 1), j) * frac(s - j, s);
  } else {
    v = -frac(s - j + 1, i) * h_rec_rat(s, i - 1, j - 1, memo) -
        frac(j - i, i) * h_rec_rat(s, i - 1, j, memo);
  }
  memo.emplace(key, v);
  return v;
}

Int checked_integer(const Rat& q, const char* what) {
  if (!is_integer(q)) throw std::logic_error(std::string(what) + ": non-integral value " + to_string(q));
  return to_integer(q);
}

}  // namespace

bool h_in_domain(int s, int i, int j) { return s >= 1 && i >= 0 && i <= s - 1 && j >= 1 && j <= s; }

HValue h_recursive(int s, int i, int j) {
  require_s(s);
  if (!h_in_domain(s, i, j)) return {Int(0), false};
  // Memo tables are per-s and shared across calls.
  static std::mutex mu;
  static std::map<int, std::map<std::pair<int, int>, Rat>> memos;
  std::lock_guard<std::mutex> lock(mu);
  return {checked_integer(h_rec_rat(s, i, j, memos[s]), "h_recursive"), true};
}

Rat h_term(int term, int s, long i, long j) {
  require_s(s);
  switch (term) {
    case 1:
      return j <= i ? Rat(neg_one_pow(j + 1) * binom(s, j)) : Rat(0);
    case 2:
      if (s + j - i - 1 < 0) return 0;
      return Rat(neg_one_pow(i + 1) * binom(2L * s, i) * binom(s + j - i - 1, s));
    case 3: {
      if (i < 0 || i > 2L * s) throw ParameterError("h_term: i out of range");
      Rat acc = 0;
      for (long t = 0; t <= i; ++t) {
        // (2s - i) / (2s - t); at i = t = 2s the ratio is 1.
        Rat ratio = (t == 2L * s) ? Rat(1) : frac(2L * s - i, 2L * s - t);
        acc += Rat(neg_one_pow(t) * binom(i, t)) * ratio * binom(Rat(s - t - 1 + j), j);
      }
      return Rat(neg_one_pow(i) * binom(2L * s, i)) * acc;
    }
    default:
      throw ParameterError("h_term: term must be 1, 2 or 3");
  }
}

Rat h_extended(int s, long i, long j) { return h_term(1, s, i, j) + h_term(2, s, i, j) + h_term(3, s, i, j); }

HValue h_explicit(int s, int i, int j) {
  require_s(s);
  if (!h_in_domain(s, i, j)) return {Int(0), false};
  return {checked_integer(h_extended(s, i, j), "h_explicit"), true};
}

Series h_gf_series(int s, int i, int order) {
  require_s(s);
  if (i < 0 || i > s - 1) throw ParameterError("h_gf_series: need 0 <= i <= s-1");
  if (order < 0) throw ParameterError("h_gf_series: negative order");
  Series h(order);
  for (int j = 0; j <= i && j <= order; ++j) h[j] += Rat(neg_one_pow(j + 1) * binom(s, j));

  Series second = Series::monomial(order, i + 1, Rat(neg_one_pow(i + 1) * binom(2L * s, i))) *
                  Series::one_minus_x_pow(order, s + 1);
  h += second;

  Series third(order);
  for (int t = 0; t <= i; ++t) {
    Series term = Series::one_minus_x_pow(order, s - t);
    term *= frac(neg_one_pow(t) * binom(i, t), 2 * s - t);
    third += term;
  }
  third *= Rat(neg_one_pow(i) * (2 * s - i) * binom(2L * s, i));
  h += third;
  return h;
}

std::vector<Int> h_from_gf(int s, int i, int j_max) {
  if (j_max < 1) throw ParameterError("h_from_gf: j_max must be >= 1");
  Series h = h_gf_series(s, i, j_max);
  std::vector<Int> out;
  out.reserve(j_max);
  for (int j = 1; j <= j_max; ++j) out.push_back(checked_integer(h[j], "h_from_gf"));
  return out;
}

std::vector<std::vector<Int>> h_from_double_gf(int s, int i_max, int j_max) {
  require_s(s);
  if (i_max < 1 || j_max < 1) throw ParameterError("h_from_double_gf: truncation orders must be >= 1");
  const int zo = i_max, xo = j_max;
  Series2 a = Series2::one_minus_xz_pow(zo, xo, s) * Series2::geometric_z(zo, xo);
  Series2 b = Series2::one_minus_xz_pow(zo, xo, 2L * s) *
              Series2::from_x(zo, Series::monomial(xo, 1, 1) * Series::one_minus_x_pow(xo, s + 1));
  Series2 c = Series2::one_minus_xz_pow(zo, xo, 2L * s) *
              Series2::from_x(zo, Series::one_minus_x_pow(xo, s)) * Series2::geometric_z(zo, xo);
  Series2 total(zo, xo);
  total -= a;
  total -= b;
  total += c;

  std::vector<std::vector<Int>> out(zo + 1, std::vector<Int>(xo + 1));
  for (int i = 0; i <= zo; ++i)
    for (int j = 0; j <= xo; ++j) out[i][j] = checked_integer(total.at(i, j), "h_from_double_gf");
  return out;
}

Int column_sum(int s, int j) {
  require_s(s);
  if (j < 1 || j > s) throw ParameterError("column_sum: need 1 <= j <= s");
  Int acc = 0;
  for (int i = 0; i <= j - 1; ++i) acc += h_recursive(s, i, j).value;
  return acc;
}

Int column_sum_closed_form(int s, int j) { return neg_one_pow(j + 1) * (s - 1) * binom(s - 1, j - 1); }

int gf_recursion_first_failure(int s, int order) {
  require_s(s);
  for (int i = 1; i <= s - 1; ++i) {
    Series prev = h_gf_series(s, i - 1, order + 1);
    Series cur = h_gf_series(s, i, order);
    // -(s x / i - 1) H = H - (s/i) x H
    Series x = Series::monomial(order + 1, 1, 1);
    Series rhs = prev - (x * prev) * frac(s, i);
    Series xxm1 = Series::monomial(order + 1, 2, 1) - x;
    rhs += (xxm1 * prev.derivative().truncated(order + 1)) * frac(1, i);
    for (int j = 0; j <= order; ++j)
      if (rhs.coeff(j) != cur[j]) return i;
  }
  return 0;
}

}  // namespace polycount
