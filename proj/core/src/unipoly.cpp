#include "grlie/unipoly.hpp"

#include <sstream>

namespace grlie {

void UniPoly::trim() {
  while (!c_.empty() && grlie::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& s) {
  return UniPoly(std::vector<Scalar>{s});
}

UniPoly UniPoly::monomial(const Scalar& s, int deg) {
  std::vector<Scalar> c(deg + 1, Scalar(0));
  c[deg] = s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Scalar& s) const {
  std::vector<Scalar> c(c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

Scalar UniPoly::eval(const Scalar& t) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (grlie::is_zero(c_[i])) continue;
    Scalar a = c_[i];
    if (first) {
      if (sgn(a) < 0) os << "-", a = -a;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

UniRationalFunction::UniRationalFunction(UniPoly n, UniPoly d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DomainError("rational function: zero denominator");
}

std::vector<Scalar> series_expand(const UniRationalFunction& f, int degree_bound) {
  if (is_zero(f.den.coeff(0)))
    throw DomainError("series_expand: not expandable (denominator vanishes at 0)");
  std::vector<Scalar> c(degree_bound + 1, Scalar(0));
  Scalar d0 = f.den.coeff(0);
  for (int k = 0; k <= degree_bound; ++k) {
    Scalar acc = f.num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= f.den.coeff(j) * c[k - j];
    c[k] = acc / d0;
  }
  return c;
}

std::vector<Scalar> series_mul(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b, int bound) {
  std::vector<Scalar> c(bound + 1, Scalar(0));
  for (int i = 0; i <= bound && i < (int)a.size(); ++i)
    for (int j = 0; i + j <= bound && j < (int)b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Scalar> series_inverse(const std::vector<Scalar>& a, int bound) {
  if (a.empty() || is_zero(a[0]))
    throw DomainError("series_inverse: zero constant term");
  std::vector<Scalar> c(bound + 1, Scalar(0));
  c[0] = 1 / a[0];
  for (int k = 1; k <= bound; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k && j < (int)a.size(); ++j) acc += a[j] * c[k - j];
    c[k] = -acc / a[0];
  }
  return c;
}

}  // namespace grlie
