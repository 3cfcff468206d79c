#include "doctest.h"

#include <tuple>

#include "polycount/errors.hpp"
#include "polycount/hseq.hpp"

using namespace polycount;

namespace {

// Rows i = 0..s-1, entries j = i+1..s.
const std::vector<std::vector<long>> kTable4 = {{3, 5, 5, 0}, {-14, -20, -5}, {24, 15}, {-13}};
const std::vector<std::vector<long>> kTable5 = {
    {4, 9, 14, 14, 0}, {-25, -55, -70, -14}, {65, 125, 56}, {-85, -79}, {41}};

void check_table(int s, const std::vector<std::vector<long>>& rows) {
  auto dgf = h_from_double_gf(s, s, s + 1);
  for (int i = 0; i < s; ++i) {
    auto gf = h_from_gf(s, i, s);
    for (int j = i + 1; j <= s; ++j) {
      long want = rows[i][j - i - 1];
      CAPTURE(i);
      CAPTURE(j);
      CHECK(h_recursive(s, i, j).value == want);
      CHECK(h_explicit(s, i, j).value == want);
      CHECK(gf[j - 1] == want);
      CHECK(dgf[i][j] == want);
    }
  }
}

}  // namespace

TEST_CASE("tables for s = 4 and s = 5") {
  check_table(4, kTable4);
  check_table(5, kTable5);
}

TEST_CASE("h_recursive examples") {
  CHECK(h_recursive(4, 0, 1).value == 3);
  CHECK(h_recursive(4, 2, 3).value == 24);
  CHECK(h_recursive(5, 4, 5).value == 41);
  auto z = h_recursive(4, 3, 2);
  CHECK(z.value == 0);
  CHECK(z.defined);
}

TEST_CASE("h_explicit examples") {
  CHECK(h_explicit(4, 1, 4).value == -5);
  CHECK(h_explicit(5, 2, 4).value == 125);
  CHECK(h_explicit(6, 0, 1).value == 5);
}

TEST_CASE("h_from_gf examples") {
  CHECK(h_from_gf(4, 1, 4) == std::vector<Int>{0, -14, -20, -5});
  CHECK(h_from_gf(5, 0, 5) == std::vector<Int>{4, 9, 14, 14, 0});
  CHECK(h_from_gf(3, 2, 2) == std::vector<Int>{0, 0});
  CHECK_THROWS_AS(h_from_gf(3, 3, 2), ParameterError);
}

TEST_CASE("h_from_double_gf examples") {
  CHECK(h_from_double_gf(4, 4, 5)[2][3] == 24);
  CHECK(h_from_double_gf(5, 5, 6)[3][5] == -79);
  CHECK(h_from_double_gf(4, 4, 5)[2][1] == 0);
  CHECK_THROWS_AS(h_from_double_gf(4, 0, 3), ParameterError);
}

TEST_CASE("column_sum examples") {
  CHECK(column_sum(4, 3) == 9);
  CHECK(column_sum(4, 4) == -3);
  CHECK(column_sum(5, 1) == 4);
}

TEST_CASE("out-of-domain queries") {
  for (auto [s, i, j] : std::vector<std::tuple<int, int, int>>{{4, 4, 4}, {4, 0, 0}, {4, -1, 2}, {4, 0, 5}}) {
    CHECK_FALSE(h_recursive(s, i, j).defined);
    CHECK(h_recursive(s, i, j).value == 0);
    CHECK_FALSE(h_explicit(s, i, j).defined);
  }
  CHECK_THROWS_AS(h_recursive(0, 0, 1), ParameterError);
}

TEST_CASE("four routes agree for s <= 8") {
  for (int s = 1; s <= 8; ++s) {
    auto dgf = h_from_double_gf(s, s, s + 1);
    for (int i = 0; i < s; ++i) {
      auto gf = h_from_gf(s, i, s);
      for (int j = 1; j <= s; ++j) {
        CAPTURE(s);
        CAPTURE(i);
        CAPTURE(j);
        Int r = h_recursive(s, i, j).value;
        CHECK(h_explicit(s, i, j).value == r);
        CHECK(gf[j - 1] == r);
        CHECK(dgf[i][j] == r);
        if (j <= i) CHECK(r == 0);
      }
    }
    CHECK(h_recursive(s, 0, s).value == 0);
  }
}

TEST_CASE("closed forms for low rows") {
  for (long s = 1; s <= 8; ++s) {
    CHECK(h_recursive(s, 0, 1).value == s - 1);
    if (s >= 2) {
      CHECK(h_recursive(s, 0, 2).value == (s + 1) * (s - 2) / 2);
      CHECK(h_recursive(s, 1, 2).value == -s * (3 * s - 5) / 2);
    }
    if (s >= 3) {
      CHECK(h_recursive(s, 0, 3).value == (s + 1) * (s + 2) * (s - 3) / 6);
      CHECK(h_recursive(s, 1, 3).value == -s * (s + 1) * (5 * s - 14) / 6);
      CHECK(h_recursive(s, 2, 3).value == s * (7 * s * s - 21 * s + 8) / 6);
    }
  }
}

TEST_CASE("column sums for s <= 8") {
  for (int s = 1; s <= 8; ++s)
    for (int j = 1; j <= s; ++j) CHECK(column_sum(s, j) == column_sum_closed_form(s, j));
}

TEST_CASE("series recursion between consecutive rows") {
  for (int s = 1; s <= 8; ++s) {
    CAPTURE(s);
    CHECK(gf_recursion_first_failure(s, s) == 0);
    CHECK(gf_recursion_first_failure(s, s + 4) == 0);
  }
}

TEST_CASE("extended explicit formula at row i = s") {
  for (int s = 1; s <= 7; ++s) {
    for (int j = 0; j <= s; ++j) CHECK(h_extended(s, s, j) == 0);
    // Without the bracket on the second term, j = 0 would leak -C(2s, s).
    CHECK(h_term(2, s, s, 0) == 0);
  }
}

TEST_CASE("explicit formula matches recursion at j = 0") {
  for (int s = 1; s <= 7; ++s)
    for (int i = 0; i < s; ++i) CHECK(h_extended(s, i, 0) == 0);
}
