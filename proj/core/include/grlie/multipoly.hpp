#pragma once

#include <map>
#include <string>
#include <vector>

#include "grlie/scalar.hpp"

namespace grlie {

using Expo = std::vector<int>;  // exponent vector, one entry per variable

// Sparse multivariate polynomial over the rationals.  Terms are kept in a
// map ordered lexicographically by exponent vector; zero coefficients are
// never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Scalar& c);
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  void add_term(const Expo& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& s) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  int total_degree() const;  // -1 for zero
  int min_degree() const;    // degree of lowest homogeneous part; -1 for zero
  MultiPoly homogeneous_component(int d) const;
  bool is_homogeneous(int* degree_out = nullptr) const;

  Scalar eval(const std::vector<Scalar>& point) const;
  // Substitute variable i by values[i] (polynomials over a possibly
  // different variable set).
  MultiPoly substitute(const std::vector<MultiPoly>& values, int new_nvars) const;

  // Divide by the gcd of the coefficients (primitive part, sign-normalized
  // so the lex-leading coefficient is positive).  No-op on zero.
  MultiPoly primitive_part() const;

  // Exact division; throws DomainError if the division is not exact.
  MultiPoly exact_divide(const MultiPoly& divisor) const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Expo, Scalar> terms_;
};

// Laurent polynomial: exponents may be negative.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Scalar& c);
  static LaurentPoly monomial(int nvars, const Expo& e, const Scalar& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  void add_term(const Expo& e, const Scalar& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Componentwise minimum exponent over all terms (0 vector if zero).
  Expo min_exponents() const;
  LaurentPoly shift(const Expo& e) const;  // multiply by t^e

  Scalar eval(const std::vector<Scalar>& point) const;

  // Requires all exponents non-negative; substitutes t_i = 1 + x_i.
  MultiPoly substitute_one_plus_x() const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Expo, Scalar> terms_;
};

}  // namespace grlie
