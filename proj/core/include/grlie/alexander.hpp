#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grlie/groups.hpp"
#include "grlie/multipoly.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

// Presentation of a module over S = Q[x_1..x_n]: cokernel of the map whose
// matrix has the given relation columns inside S^q.
struct ModulePresentation {
  enum Provenance { alexander, linearized, koszul };
  int n = 0;  // number of polynomial variables
  int q = 0;  // ambient rank
  std::vector<std::vector<MultiPoly>> columns;  // each of length q
  Provenance provenance = alexander;
  std::string label;
};

// Columns of the p-th Koszul differential Lambda^p(C^n) ox S ->
// Lambda^{p-1}(C^n) ox S, delta(e_S) = sum_{i in S} (-1)^{pos(i,S)} x_i
// e_{S \ i}.  Rows and columns are indexed by lexicographically ordered
// sorted subsets.
std::vector<std::vector<MultiPoly>> koszul_differential(int n, int p);

// Preimage under delta_2 of a cycle v (length n, sum v_i x_i = 0, zero
// constant terms), via the minimal-variable contracting homotopy.  The
// result w (length C(n,2)) is re-verified: delta_2(w) = v exactly.
std::vector<MultiPoly> koszul_lift(const std::vector<MultiPoly>& v);

// Alexander-invariant presentation [delta_3 | nu]: Fox matrix, Laurent
// denominators cleared by the componentwise-minimum unit, t_i = 1 + x_i,
// one lifted column per relator.  Requires commutator relators.
ModulePresentation alexander_presentation(const GroupPresentation& g);

// Dimensions of the associated graded module (by powers of the augmentation
// ideal m) in degrees 0..D, computed by exact elimination in S/m^{D+1}.
// Ranks run over two prime fields derived from the seed and must agree.
std::vector<long long> gr_hilbert(const ModulePresentation& m, int D,
                                  std::uint64_t seed = 12345);

// Replace every relation column by its lowest-degree homogeneous part
// (entrywise component of the column's minimal degree).  Input provenance
// must be `alexander`; output columns are homogeneous.
ModulePresentation linearized_presentation(const ModulePresentation& m);

// Hilbert function of the graded module presented by homogeneous columns,
// degrees 0..D; each degree is an independent exact rank computation.
std::vector<long long> graded_hilbert(const ModulePresentation& m, int D,
                                      std::uint64_t seed = 12345);

// Chen ranks theta_2, theta_3, ... (theta[k-2] = theta_k).
struct ThetaSeries {
  std::vector<long long> theta;
  long long at(int k) const;  // k >= 2
};

enum class ThetaFamily { free_grp, purebraid };

// Closed-form Chen ranks: theta_k(F_n) = (k-1) C(n+k-2,k) with theta_1 = n;
// theta_k(P_n) = (k-1) C(n+1,4) for k >= 3, theta_1 = C(n,2),
// theta_2 = C(n,3).
Int theta_closed(ThetaFamily kind, int n, int k);

struct ChenFormulaVerdict {
  bool holds = true;
  int first_failure = -1;  // smallest failing k, -1 if none
  Int lhs, rhs;            // both sides at the first failing k
  std::string report;
};

// Test theta_k = sum_m h_m * theta_k(F_m) for k_min <= k <= D, where
// components maps m -> h_m.
ChenFormulaVerdict chen_formula_test(const ThetaSeries& theta,
                                     const std::map<int, long long>& components,
                                     int k_min, int D);

}  // namespace grlie
