#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grlie/cohomology.hpp"
#include "grlie/groups.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

// Hall basis of the free Lie algebra on n generators, degrees 1..K.
// Element ids are assigned degree by degree; the id order is the Hall
// order.  [u,v] is a basis element iff u > v and, when u = [a,b], b <= v.
class HallBasis {
 public:
  struct Elem {
    int deg;
    int left = -1, right = -1;  // children ids; -1 for generators
    int gen = -1;               // generator index for degree 1
  };

  // Throws ResourceError if any degree exceeds `budget` elements.
  HallBasis(int n, int K, long long budget = 250000);

  int n() const { return n_; }
  int max_degree() const { return K_; }
  const std::vector<Elem>& elems() const { return elems_; }
  const std::vector<int>& degree_ids(int k) const { return by_degree_[k]; }
  long long count(int k) const { return (long long)by_degree_[k].size(); }

  // Expansion of [u,v] in the basis (integer structure constants).
  using Vec = std::map<int, long long>;
  Vec bracket(int u, int v);

 private:
  Vec bracket_ordered(int u, int v);  // u > v
  int n_, K_;
  std::vector<Elem> elems_;
  std::vector<std::vector<int>> by_degree_;
  std::map<std::pair<int, int>, int> pair_id_;
  std::map<std::pair<int, int>, Vec> memo_;
};

// Finitely presented graded Lie algebra with generators in degree 1 and
// quadratic relators.  relators[r] has length C(n,2): the coefficient of
// [x_i, x_j] for pairs (i,j), i < j, in lexicographic order.
struct LiePresentation {
  int n = 0;
  std::vector<std::vector<Scalar>> relators;
  std::string label;
};

// Quotient of the free Lie algebra on the dual of A^1 by the image of the
// dual of the cup map; relators = rows of the cup matrix.
LiePresentation holonomy_presentation(const TwoStepAlgebra& a);

struct GradedDims {
  std::vector<long long> dims;  // dims[k-1] = dimension in degree k
};

// Dimensions of the graded quotient in degrees 1..K.  Ranks are computed
// over two prime fields derived from the seed and must agree (a third
// prime arbitrates a disagreement).
GradedDims graded_dims(const LiePresentation& L, int K,
                       std::uint64_t seed = 12345);

// theta_k = dim (g/g'')_k for the presented Lie algebra g.
GradedDims chen_dims(const LiePresentation& L, int K,
                     std::uint64_t seed = 12345);

// Degree-2 initial forms of the relators (Magnus expansion); result rows
// are LiePresentation relator vectors.  Requires commutator relators.
LiePresentation quadratic_initial_forms(const GroupPresentation& g);

struct MildnessResult {
  bool mild = true;
  int first_failure = -1;  // degree of first mismatch, -1 if none
  std::vector<long long> phi;
  std::string report;
};

// Anick's Hilbert-series criterion: the presentation is mild up to K iff
// prod (1-t^k)^{-phi_k} agrees with 1/(1 - n t + m t^2) through degree K.
MildnessResult mildness_check(const GroupPresentation& g, int K,
                              std::uint64_t seed = 12345);

}  // namespace grlie
