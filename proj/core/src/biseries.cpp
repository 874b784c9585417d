#include "grlie/biseries.hpp"

namespace grlie {

BiSeries BiSeries::operator+(const BiSeries& o) const {
  BiSeries r(u_, t_);
  for (int i = 0; i <= u_; ++i)
    for (int j = 0; j <= t_; ++j) r.c_[i][j] = c_[i][j] + o.c_[i][j];
  return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  BiSeries r(u_, t_);
  for (int i1 = 0; i1 <= u_; ++i1)
    for (int j1 = 0; j1 <= t_; ++j1) {
      if (is_zero(c_[i1][j1])) continue;
      for (int i2 = 0; i1 + i2 <= u_; ++i2)
        for (int j2 = 0; j1 + j2 <= t_; ++j2)
          r.c_[i1 + i2][j1 + j2] += c_[i1][j1] * o.c_[i2][j2];
    }
  return r;
}

BiSeries BiSeries::operator*(const Scalar& s) const {
  BiSeries r(u_, t_);
  for (int i = 0; i <= u_; ++i)
    for (int j = 0; j <= t_; ++j) r.c_[i][j] = c_[i][j] * s;
  return r;
}

UniPoly BiSeries::u_coefficient(int n) const {
  std::vector<Scalar> coeffs(c_[n]);
  return UniPoly(std::move(coeffs));
}

BiSeries BiSeries::exp(const BiSeries& g) {
  if (!is_zero(g.coeff(0, 0)))
    throw DomainError("exp undefined in truncation: nonzero constant term");
  BiSeries acc(g.u_, g.t_);
  acc.set_coeff(0, 0, Scalar(1));
  BiSeries pow = acc;  // g^0
  Scalar fact(1);
  // Terms beyond k = (U+1)(T+1) cannot contribute, but g^k = 0 once k
  // exceeds U when g has no pure-t part, which holds for all our inputs;
  // iterate until the power vanishes.
  for (int k = 1; k <= (g.u_ + 1) * (g.t_ + 1); ++k) {
    pow = pow * g;
    bool zero = true;
    for (int i = 0; i <= g.u_ && zero; ++i)
      for (int j = 0; j <= g.t_ && zero; ++j) zero = is_zero(pow.coeff(i, j));
    if (zero) break;
    fact *= k;
    acc = acc + pow * (1 / fact);
  }
  return acc;
}

BiSeries BiSeries::u_over_one_minus_tu(int u_order, int t_order) {
  // u/(1-tu) = sum_{k>=0} t^k u^{k+1}
  BiSeries g(u_order, t_order);
  for (int k = 0; k + 1 <= u_order && k <= t_order; ++k)
    g.set_coeff(k + 1, k, Scalar(1));
  return g;
}

BiSeries BiSeries::neg_log_one_minus_tu_over_t(int u_order, int t_order) {
  // -log(1-tu)/t = sum_{k>=1} u^k t^{k-1} / k
  BiSeries g(u_order, t_order);
  for (int k = 1; k <= u_order && k - 1 <= t_order; ++k)
    g.set_coeff(k, k - 1, Scalar(1, k));
  return g;
}

BiSeries BiSeries::exp_tu_minus_one_over_t(int u_order, int t_order) {
  // (exp(tu)-1)/t = sum_{k>=1} u^k t^{k-1} / k!
  BiSeries g(u_order, t_order);
  Scalar fact(1);
  for (int k = 1; k <= u_order; ++k) {
    fact *= k;
    if (k - 1 <= t_order) g.set_coeff(k, k - 1, 1 / fact);
  }
  return g;
}

}  // namespace grlie
