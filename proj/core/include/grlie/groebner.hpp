#pragma once

#include <optional>
#include <vector>

#include "grlie/multipoly.hpp"

namespace grlie {

struct MonomialOrder {
  enum Kind { grevlex, lex } kind = grevlex;
  std::vector<int> perm;  // empty = identity; position i reads variable perm[i]

  // true if a < b in the order
  bool less(const Expo& a, const Expo& b) const;
  static MonomialOrder default_order() { return MonomialOrder{}; }
};

// Leading term of f with respect to the order; f must be nonzero.
std::pair<Expo, Scalar> leading_term(const MultiPoly& f, const MonomialOrder& o);

// Remainder of f on division by the (not necessarily Groebner) basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& o);

// Reduced, monic Groebner basis (Buchberger with pair pruning).
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                  const MonomialOrder& o);

struct Ideal {
  int nvars = 0;
  std::vector<MultiPoly> gens;

  Ideal() = default;
  Ideal(int nv, std::vector<MultiPoly> g) : nvars(nv), gens(std::move(g)) {}

  // Cached reduced basis in the given order (computed on first use).
  const std::vector<MultiPoly>& groebner(
      const MonomialOrder& o = MonomialOrder::default_order()) const;

 private:
  mutable std::optional<std::vector<MultiPoly>> gb_;
  mutable MonomialOrder gb_order_;
};

bool ideal_membership(const MultiPoly& f, const Ideal& I);

// f in sqrt(I): powers f, f^2, f^3 first, then Rabinowitsch
// (1 in I + <1 - y f> in one extra variable).
bool radical_membership(const MultiPoly& f, const Ideal& I);

// Dimension of V(I): max size of a variable subset meeting no leading-term
// support (grevlex).  Returns nvars for the zero ideal, -1 if 1 in I.
int krull_dimension(const Ideal& I);

}  // namespace grlie
