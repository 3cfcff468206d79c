// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polycount/numeric.hpp"

namespace polycount {

// Expression tree evaluable exactly at rational assignments of its variables.
// Binomials follow the generalized convention of `binom`; the lower index must
// evaluate to an integer. Division by zero raises PoleError.
class Expr {
 public:
  enum class Kind { integer, rational, variable, sum, product, quotient, power, binomial, factorial, sign, series };

  Expr(int v);  // NOLINT: integer literals convert implicitly
  Expr(long v);  // NOLINT
  static Expr integer(const Int& v);
  static Expr rational(const Rat& v);
  static Expr var(const std::string& name);

  Kind kind() const;
  std::string to_string() const;

  // Number of integer literals, in a fixed pre-order.
  int literal_count() const;
  // Copy with the idx-th integer literal shifted by delta.
  Expr perturb_literal(int idx, long delta) const;
  // Replace free occurrences of `name` by `by`.
  Expr substitute(const std::string& name, const Expr& by) const;

  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);

Expr V(const std::string& name);
Expr Q(long num, long den);          // rational constant
Expr C(const Expr& a, const Expr& b);  // binomial
Expr fact(const Expr& a);
Expr sgn(const Expr& e);              // (-1)^e
Expr pow(const Expr& base, const Expr& exponent);
// sum_{var = lo}^{hi} body; empty when hi < lo.
Expr sum(const std::string& var, const Expr& lo, const Expr& hi, const Expr& body);

// Variable assignment. Variables are interned to small integer slots.
class Env {
 public:
  void set(const std::string& name, const Rat& v);
  void set(int slot, const Rat& v);
  void unset(int slot);
  const Rat& get(int slot) const;
  bool has(int slot) const;

 private:
  std::vector<Rat> values_;
  std::vector<char> bound_;
};

int var_slot(const std::string& name);
const std::string& var_name(int slot);

Rat eval(const Expr& e, Env& env);
Rat eval(const Expr& e, const std::vector<std::pair<std::string, Rat>>& assignment);

}  // namespace polycount
