#pragma once

#include <vector>

#include "grlie/scalar.hpp"

namespace grlie {

// Dense univariate polynomial in t.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Scalar& s);
  static UniPoly monomial(const Scalar& s, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const {
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Scalar& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  Scalar eval(const Scalar& t) const;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Quotient of univariate polynomials; denominator nonzero with nonzero
// constant term so the function expands at t = 0.
struct UniRationalFunction {
  UniPoly num, den;
  UniRationalFunction(UniPoly n, UniPoly d);
};

// Taylor coefficients c_0..c_D of f at t = 0, exact.
std::vector<Scalar> series_expand(const UniRationalFunction& f, int degree_bound);

// Truncated power-series helpers on coefficient vectors (index = degree).
std::vector<Scalar> series_mul(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b, int bound);
// 1/a truncated; a[0] must be nonzero.
std::vector<Scalar> series_inverse(const std::vector<Scalar>& a, int bound);

}  // namespace grlie
