#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlie/cohomology.hpp"
#include "grlie/groebner.hpp"
#include "grlie/multipoly.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

// Matrix of the degree-1 differential of the Aomoto complex over
// S = Q[x_1..x_{b1}]: entry (r, j) = sum_i [coefficient of basis2[r] in
// e_i e_j] * x_i.  All entries are homogeneous linear.
struct AomotoMatrix {
  int b1 = 0, b2 = 0;
  std::vector<std::vector<MultiPoly>> rows;  // b2 rows of length b1
};

AomotoMatrix aomoto_matrix(const TwoStepAlgebra& a);

// Aomoto Betti number b_1(A, a) = dim ker(delta^1 at a) - rank(delta^0 at
// a): b1 - rank - 1 for a != 0, and b1 at the origin.
long aomoto_b1(const TwoStepAlgebra& a, const std::vector<Scalar>& point);

// Ideal of the (b1 - d)-minors of the Aomoto matrix; its variety away from
// the origin is exactly {a != 0 : b_1(A,a) >= d}.  Minor size < 1 gives
// the zero ideal.
Ideal resonance_ideal(const TwoStepAlgebra& a, int d);

// Linear subspace of A^1 given by a spanning set.
struct LinearSubspaceParam {
  int b1 = 0;
  std::vector<std::vector<Scalar>> spans;  // each of length b1
};

// True iff every (b1 - d)-minor vanishes identically after substituting
// the parametrization a = sum s_i v_i.
bool subspace_in_resonance(const TwoStepAlgebra& a,
                           const LinearSubspaceParam& L, int d);

struct SampleReport {
  bool ok = true;
  int trials = 0;
  int failures = 0;
  std::string report;
};

// Sampled check of the product/coproduct Aomoto Betti formulas: at random
// rational points (a1, a2),
//   tensor:     b_1 = b_1(A,a1) if a2 = 0, b_1(B,a2) if a1 = 0, else 0;
//   coproduct:  b_1 = b_1(A,a1) + b_1(B,a2) + 1 when a1, a2 != 0, and
//               b_1(A,a1) + b1(B) when a2 = 0 (symmetrically for a1 = 0).
SampleReport betti_formula_check(const TwoStepAlgebra& a,
                                 const TwoStepAlgebra& b, int trials,
                                 std::uint64_t seed = 12345);

// For algebras with top degree <= 2: checks the pointwise identity
// b_2(A,a) = b_1(A,a) + chi at sampled a != 0, where b_2(A,a) = b2 - rank
// of the Aomoto matrix at a.
SampleReport lemma_resonance2_check(const TwoStepAlgebra& a, int points,
                                    std::uint64_t seed = 12345);

}  // namespace grlie
