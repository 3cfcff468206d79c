// SPDX-License-Identifier: Apache-2.0
#include "polycount/series.hpp"

#include <algorithm>

namespace polycount {

Series Series::monomial(int order, int power, const Rat& coeff) {
  Series s(order);
  if (power >= 0 && power <= order) s[power] = coeff;
  return s;
}

Series Series::one_minus_x_pow(int order, long neg_power) {
  Series s(order);
  for (int j = 0; j <= order; ++j) s[j] = binom(Rat(neg_power + j - 1), j);
  return s;
}

Series& Series::operator+=(const Series& o) {
  int n = std::min(order(), o.order());
  for (int j = 0; j <= n; ++j) c_[j] += o.c_[j];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  int n = std::min(order(), o.order());
  for (int j = 0; j <= n; ++j) c_[j] -= o.c_[j];
  return *this;
}

Series& Series::operator*=(const Rat& f) {
  for (auto& v : c_) v *= f;
  return *this;
}

Series Series::operator*(const Series& o) const {
  int n = std::min(order(), o.order());
  Series r(n);
  for (int a = 0; a <= n; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; a + b <= n; ++b) r.c_[a + b] += c_[a] * o.c_[b];
  }
  return r;
}

Series Series::derivative() const {
  Series r(std::max(order() - 1, 0));
  for (int j = 1; j <= order(); ++j) r.c_[j - 1] = c_[j] * j;
  return r;
}

Series Series::truncated(int order) const {
  Series r(order);
  for (int j = 0; j <= order && j <= this->order(); ++j) r.c_[j] = c_[j];
  return r;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(Series a, const Rat& f) { return a *= f; }

Series2::Series2(int z_order, int x_order)
    : zo_(z_order), xo_(x_order), c_(z_order + 1, std::vector<Rat>(x_order + 1)) {}

Series2 Series2::one(int z_order, int x_order) {
  Series2 r(z_order, x_order);
  r.c_[0][0] = 1;
  return r;
}

Series2 Series2::one_minus_xz_pow(int z_order, int x_order, long p) {
  Series2 r(z_order, x_order);
  for (int l = 0; l <= p && l <= z_order && l <= x_order; ++l)
    r.c_[l][l] = Rat(neg_one_pow(l) * binom(p, l));
  return r;
}

Series2 Series2::from_x(int z_order, const Series& s) {
  Series2 r(z_order, s.order());
  for (int j = 0; j <= s.order(); ++j) r.c_[0][j] = s[j];
  return r;
}

Series2 Series2::geometric_z(int z_order, int x_order) {
  Series2 r(z_order, x_order);
  for (int i = 0; i <= z_order; ++i) r.c_[i][0] = 1;
  return r;
}

Series2& Series2::operator+=(const Series2& o) {
  for (int i = 0; i <= std::min(zo_, o.zo_); ++i)
    for (int j = 0; j <= std::min(xo_, o.xo_); ++j) c_[i][j] += o.c_[i][j];
  return *this;
}

Series2& Series2::operator-=(const Series2& o) {
  for (int i = 0; i <= std::min(zo_, o.zo_); ++i)
    for (int j = 0; j <= std::min(xo_, o.xo_); ++j) c_[i][j] -= o.c_[i][j];
  return *this;
}

Series2 Series2::operator*(const Series2& o) const {
  int zo = std::min(zo_, o.zo_), xo = std::min(xo_, o.xo_);
  Series2 r(zo, xo);
  for (int a = 0; a <= zo; ++a)
    for (int b = 0; b <= xo; ++b) {
      if (c_[a][b] == 0) continue;
      for (int p = 0; a + p <= zo; ++p)
        for (int q = 0; b + q <= xo; ++q) {
          if (o.c_[p][q] == 0) continue;
          r.c_[a + p][b + q] += c_[a][b] * o.c_[p][q];
        }
    }
  return r;
}

}  // namespace polycount
