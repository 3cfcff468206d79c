#include "doctest.h"

#include <algorithm>

#include "polycount/errors.hpp"
#include "polycount/lattice_enum.hpp"

using namespace polycount;

namespace {

Int one_polymer(long n, long m, long k) { return n * std::max(0L, m - k + 1) + m * std::max(0L, n - k + 1); }

// Two polymers: all pairs of placements minus overlapping pairs. Overlaps are
// either perpendicular (one shared site) or collinear with offset < k.
Int two_polymers(long n, long m, long k) {
  Int p = one_polymer(n, m, k);
  Int total = p * (p - 1) / 2;
  Int crossing = 0;
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < m; ++c) {
      long h = 0, v = 0;
      for (long c0 = std::max(0L, c - k + 1); c0 <= c; ++c0)
        if (c0 + k <= m) ++h;
      for (long r0 = std::max(0L, r - k + 1); r0 <= r; ++r0)
        if (r0 + k <= n) ++v;
      crossing += h * v;
    }
  auto collinear = [k](long len) {
    long starts = std::max(0L, len - k + 1), pairs = 0;
    for (long d = 1; d < k; ++d) pairs += std::max(0L, starts - d);
    return pairs;
  };
  Int overl = crossing + Int(n) * collinear(m) + Int(m) * collinear(n);
  if (k == 2) {
    // Collinear overlaps at k = 2 are already shared-site pairs; cross-check
    // against the degree form C(P,2) - sum_v C(deg v, 2).
    Int deg_form = 0;
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < m; ++c) {
        long d = (c > 0) + (c + 1 < m) + (r > 0) + (r + 1 < n);
        deg_form += d * (d - 1) / 2;
      }
    CHECK(deg_form == overl);
  }
  return total - overl;
}

}  // namespace

TEST_CASE("count_configurations examples") {
  CHECK(count_configurations({2, 2, 2}, 0) == 1);
  CHECK(count_configurations({2, 2, 2}, 1) == 4);
  CHECK(count_configurations({2, 3, 2}, 1) == 7);
  CHECK(count_configurations({2, 2, 2}, 2) == 2);
  CHECK(count_configurations({2, 2, 2}, 3) == 0);
}

TEST_CASE("count_polynomial examples") {
  CHECK(count_polynomial({2, 2, 2}).counts == std::vector<Int>{1, 4, 2});
  CHECK(count_polynomial({1, 3, 3}).counts == std::vector<Int>{1, 1});
  CHECK(count_polynomial({3, 3, 3}).counts[1] == 6);
  // 3x3 trimers: 3 full rows, 3 full columns, no mixing.
  CHECK(count_polynomial({3, 3, 3}).counts == std::vector<Int>{1, 6, 6, 2});
}

TEST_CASE("brute_force_count examples") {
  CHECK(brute_force_count({2, 2, 2}, 2) == 2);
  CHECK(brute_force_count({4, 4, 2}, 8) == count_configurations({4, 4, 2}, 8));
  CHECK(brute_force_count({4, 4, 2}, 8) == 36);
  CHECK(brute_force_count({3, 3, 4}, 1) == 0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(count_configurations({0, 3, 2}, 1), ParameterError);
  CHECK_THROWS_AS(count_configurations({3, 3, 1}, 1), ParameterError);
  CHECK_THROWS_AS(count_configurations({3, 3, 2}, -1), ParameterError);
  CHECK_THROWS_AS(brute_force_count({2, -1, 2}, 1), ParameterError);
}

TEST_CASE("resource caps") {
  EnumLimits tight;
  tight.max_states = 16;
  CHECK_THROWS_AS(count_polynomial({5, 5, 2}, tight), ResourceError);
  CHECK_NOTHROW(count_polynomial({4, 9, 2}, tight));
  EnumLimits small_work;
  small_work.brute_work_cap = 100;
  CHECK_THROWS_AS(brute_force_count({4, 4, 2}, 4, small_work), ResourceError);
}

TEST_CASE("one-polymer closed form") {
  for (int k = 2; k <= 5; ++k)
    for (int n = 1; n <= 8; ++n)
      for (int m = 1; m <= 8; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(count_configurations({n, m, k}, 1) == one_polymer(n, m, k));
      }
}

TEST_CASE("two-polymer pair-exclusion oracle") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n <= 7; ++n)
      for (int m = 1; m <= 7; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(count_configurations({n, m, k}, 2) == two_polymers(n, m, k));
      }
  CHECK(count_truncated({14, 30, 2}, 2)[2] == two_polymers(14, 30, 2));
  CHECK(count_truncated({12, 17, 3}, 2)[2] == two_polymers(12, 17, 3));
}

TEST_CASE("known dimer perfect matching counts") {
  // Domino tilings of 2xm are Fibonacci; 8x8 has 12988816.
  std::vector<Int> fib{1, 1};
  for (int i = 2; i <= 12; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
  for (int m = 1; m <= 12; ++m) {
    auto t = count_polynomial({2, m, 2});
    CHECK(t.at(m) == fib[m]);
  }
  CHECK(count_polynomial({8, 8, 2}).at(32) == 12988816);
}

TEST_CASE("transpose symmetry") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      for (int m = 1; m <= 6; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(count_polynomial({n, m, k}).counts == count_polynomial({m, n, k}).counts);
      }
}

TEST_CASE("oracle equivalence n*m <= 16") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n <= 16; ++n)
      for (int m = 1; n * m <= 16; ++m) {
        LatticeSpec spec{n, m, k};
        auto table = count_polynomial(spec);
        for (int s = 0; s <= spec.capacity() + 1; ++s) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          CAPTURE(s);
          CHECK(brute_force_count(spec, s) == table.at(s));
        }
      }
}

TEST_CASE("table shape, monotonicity in m, truncation") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 6; ++m) {
        auto a = count_polynomial({n, m, k});
        auto b = count_polynomial({n, m + 1, k});
        CHECK(a.counts[0] == 1);
        CHECK(a.s_max() == n * m / k);
        CHECK(a.at(a.s_max() + 1) == 0);
        for (int s = 0; s <= a.s_max(); ++s) CHECK(a.at(s) <= b.at(s));
        auto tr = count_truncated({n, m, k}, 2);
        for (int s = 0; s < static_cast<int>(tr.size()); ++s) CHECK(tr[s] == a.at(s));
      }
}
