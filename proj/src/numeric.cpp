// SPDX-License-Identifier: Apache-2.0
#include "polycount/numeric.hpp"

#include <stdexcept>

#include "polycount/errors.hpp"

namespace polycount {

Rat binom(const Rat& a, long b) {
  if (b < 0) return 0;
  if (is_integer(a) && a >= 0 && a < b) return 0;
  Rat num = 1;
  for (long l = 0; l < b; ++l) num *= (a - l);
  Rat r = num / Rat(factorial(b));
  r.canonicalize();
  return r;
}

Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw PoleError("division by zero");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int binom(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (a < b) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  Int r;
  mpz_bin_ui(r.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw ParameterError("factorial of a negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::logic_error("non-integral value " + to_string(q));
  return q.get_num();
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& base, long e) {
  if (e >= 0) {
    Rat r(ipow(base.get_num(), static_cast<unsigned long>(e)),
          ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw PoleError("zero raised to a negative power");
  return Rat(1) / rpow(base, -e);
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_str();
}

}  // namespace polycount
