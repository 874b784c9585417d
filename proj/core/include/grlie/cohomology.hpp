#pragma once

#include <string>
#include <vector>

#include "grlie/scalar.hpp"
#include "grlie/unipoly.hpp"

namespace grlie {

// Degree <= 2 truncation of a graded-commutative algebra: A^1 with a
// labeled basis, A^2 with a labeled basis, and the multiplication
// Lambda^2 A^1 -> A^2 as a b2 x C(b1,2) matrix over the rationals.
// Columns are indexed by pairs (i,j), i < j, in lexicographic order.
struct TwoStepAlgebra {
  int b1 = 0;
  std::vector<std::string> basis1;
  int b2 = 0;
  std::vector<std::string> basis2;
  std::vector<std::vector<Scalar>> cup;  // b2 rows, C(b1,2) columns
  bool top_degree_two = false;           // A^i = 0 for i > 2 (when certified)
  std::string label;

  int npairs() const { return b1 * (b1 - 1) / 2; }
  int euler() const { return 1 - b1 + b2; }
  static int pair_index(int i, int j, int b1);  // requires i < j

  // Column of the cup matrix for e_i * e_j, any i != j (sign handled).
  std::vector<Scalar> product(int i, int j) const;
};

// A^2 := Lambda^2 A^1 / span(relations); each relation is a vector of
// length C(b1,2).  The A^2 basis is the echelon complement of the
// relation span (lexicographic pair order).
TwoStepAlgebra quadratic_algebra(const std::vector<std::string>& basis1,
                                 const std::vector<std::vector<Scalar>>& relations);

// Built-in algebras: "arnold" (H*(P_n)), "beer_vP" (H*(vP_n)),
// "beer_vP_plus" (H*(vP_n^+)), "free", "abelian".
TwoStepAlgebra algebra_family(const std::string& name, int n);

// Quotient by the two-sided ideal generated by the degree-1 element with
// the given coordinates.
TwoStepAlgebra quotient_by_degree_one(const TwoStepAlgebra& a,
                                      const std::vector<Scalar>& z);

// H*(P4) modulo the Euler class sum of all generators; top degree 2.
TwoStepAlgebra pbar4_algebra();

TwoStepAlgebra tensor_algebra(const TwoStepAlgebra& a, const TwoStepAlgebra& b);
TwoStepAlgebra coproduct_algebra(const TwoStepAlgebra& a, const TwoStepAlgebra& b);

// Closed-form Poincare polynomials: "P" -> prod (1+kt);
// "vP" -> sum L(n,n-i) t^i; "vP_plus" -> sum S(n,n-i) t^i.
UniPoly poincare_closed(const std::string& family, int n);

struct EgfCheckResult {
  bool ok = true;
  std::string report;
};

// Expand the exponential generating function of the family's Poincare
// polynomials and compare the coefficient of u^n/n! with
// poincare_closed(family, n) for all n <= order.
EgfCheckResult egf_identity_check(const std::string& family, int order);

std::string algebra_to_json(const TwoStepAlgebra& a);

}  // namespace grlie
