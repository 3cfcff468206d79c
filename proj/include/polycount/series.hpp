// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polycount/numeric.hpp"

namespace polycount {

// Truncated power series in x: coefficients of x^0..x^order.
class Series {
 public:
  explicit Series(int order) : c_(order + 1) {}

  static Series monomial(int order, int power, const Rat& coeff);
  // (1 - x)^(-p); p may be zero or negative.
  static Series one_minus_x_pow(int order, long neg_power);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int j) const { return c_[j]; }
  Rat& operator[](int j) { return c_[j]; }
  Rat coeff(int j) const { return (j < 0 || j > order()) ? Rat(0) : c_[j]; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rat& f);
  Series operator*(const Series& o) const;
  Series derivative() const;  // loses the top coefficient's contribution
  Series truncated(int order) const;

 private:
  std::vector<Rat> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(Series a, const Rat& f);

// Truncated bivariate series: coefficient of z^i x^j at (i, j).
class Series2 {
 public:
  Series2(int z_order, int x_order);

  static Series2 one(int z_order, int x_order);
  // (1 - x z)^p for p >= 0
  static Series2 one_minus_xz_pow(int z_order, int x_order, long p);
  static Series2 from_x(int z_order, const Series& s);
  // 1 / (1 - z)
  static Series2 geometric_z(int z_order, int x_order);

  int z_order() const { return zo_; }
  int x_order() const { return xo_; }
  const Rat& at(int i, int j) const { return c_[i][j]; }
  Rat& at(int i, int j) { return c_[i][j]; }

  Series2& operator+=(const Series2& o);
  Series2& operator-=(const Series2& o);
  Series2 operator*(const Series2& o) const;

 private:
  int zo_;
  int xo_;
  std::vector<std::vector<Rat>> c_;
};

}  // namespace polycount
