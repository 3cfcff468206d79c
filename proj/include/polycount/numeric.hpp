// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace polycount {

using Int = mpz_class;
using Rat = mpq_class;

// Generalized binomial: 0 for b < 0, 0 for integer 0 <= a < b, otherwise
// the falling factorial a(a-1)...(a-b+1) / b!.
Rat binom(const Rat& a, long b);
Int binom(long a, long b);

Int factorial(long n);

inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

bool is_integer(const Rat& q);
Int to_integer(const Rat& q);  // throws std::logic_error when q is not integral

// num / den in canonical form; throws PoleError when den is 0.
Rat frac(const Int& num, const Int& den);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, long e);  // negative e allowed; base must be nonzero then

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace polycount
