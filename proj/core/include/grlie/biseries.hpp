#pragma once

#include <vector>

#include "grlie/scalar.hpp"
#include "grlie/unipoly.hpp"

namespace grlie {

// Bivariate power series in u and t, truncated to u-order U and t-order T.
class BiSeries {
 public:
  BiSeries(int u_order, int t_order)
      : u_(u_order), t_(t_order),
        c_(u_order + 1, std::vector<Scalar>(t_order + 1, Scalar(0))) {}

  int u_order() const { return u_; }
  int t_order() const { return t_; }
  const Scalar& coeff(int i, int j) const { return c_[i][j]; }
  void set_coeff(int i, int j, const Scalar& v) { c_[i][j] = v; }

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  BiSeries operator*(const Scalar& s) const;
  bool operator==(const BiSeries& o) const { return c_ == o.c_; }

  // Coefficient of u^n as a polynomial in t.
  UniPoly u_coefficient(int n) const;

  // exp(g) = sum g^k / k!, truncated; requires g(0,0) = 0.
  static BiSeries exp(const BiSeries& g);

  // Stock generating-function arguments, truncated to the given orders:
  static BiSeries u_over_one_minus_tu(int u_order, int t_order);      // u/(1-tu)
  static BiSeries neg_log_one_minus_tu_over_t(int u_order, int t_order);
  static BiSeries exp_tu_minus_one_over_t(int u_order, int t_order);

 private:
  int u_, t_;
  std::vector<std::vector<Scalar>> c_;
};

}  // namespace grlie
