#include "doctest.h"

#include "polycount/errors.hpp"
#include "polycount/numeric.hpp"

using namespace polycount;

TEST_CASE("binomial conventions") {
  CHECK(binom(7, 2) == 21);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(0, 0) == 1);
  // Upper negation: C(-a, b) = (-1)^b C(a+b-1, b).
  for (long a = 1; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) CHECK(binom(-a, b) == neg_one_pow(b) * binom(a + b - 1, b));
  CHECK(binom(-1, 0) == 1);
  CHECK(binom(Rat(-1), 3) == -1);
  CHECK(binom(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("integer and rational binomials agree") {
  for (long a = -8; a <= 12; ++a)
    for (long b = -2; b <= 12; ++b) CHECK(Rat(binom(a, b)) == binom(Rat(a), b));
}

TEST_CASE("binomial symmetry for integer n >= k >= 0") {
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binom(n, k) == binom(n, n - k));
}

TEST_CASE("pascal rule holds for negative upper index") {
  for (long a = -10; a <= 10; ++a)
    for (long b = 1; b <= 8; ++b) CHECK(binom(a, b) == binom(a - 1, b) + binom(a - 1, b - 1));
}

TEST_CASE("factorial, powers, fractions") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(ipow(Int(2), 10) == 1024);
  CHECK(rpow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rpow(Rat(0), 0) == 1);
  CHECK_THROWS_AS(rpow(Rat(0), -1), PoleError);
  CHECK(frac(6, -4) == Rat(-3, 2));
  CHECK(frac(6, -4).get_den() == 2);
  CHECK_THROWS_AS(frac(1, 0), PoleError);
  CHECK(is_integer(frac(4, 2)));
  CHECK_FALSE(is_integer(Rat(1, 2)));
  CHECK_THROWS(to_integer(Rat(1, 2)));
  CHECK(neg_one_pow(-3) == -1);
  CHECK(neg_one_pow(0) == 1);
}
