#pragma once

#include <string>
#include <vector>

#include "grlie/multipoly.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

struct Letter {
  int gen;  // generator index
  int exp;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in the generators.
class Word {
 public:
  Word() = default;
  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  size_t size() const { return ls_.size(); }

  // Append one letter, cancelling against the current tail.
  void append(int gen, int exp);
  void append(const Word& w);
  Word inverse() const;
  bool operator==(const Word&) const = default;

  // Exponent sum per generator.
  std::vector<long long> abelianized(int ngens) const;

 private:
  std::vector<Letter> ls_;
};

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::string label;

  int ngens() const { return (int)generators.size(); }
  void validate() const;  // indices in range, relators reduced and nonempty
};

// Built-in families.
GroupPresentation free_group(int n);
GroupPresentation integers_group();
GroupPresentation abelian_group(int k);
GroupPresentation vP(int n);        // pure virtual braid group
GroupPresentation vP_plus(int n);   // upper-triangular subgroup
GroupPresentation pbar4();          // quotient of the pure braid group P4 by its center

// Dispatcher for names "free", "integers", "abelian", "vP", "vP_plus",
// "pbar4"; `n` ignored where the family takes no parameter.
GroupPresentation family(const std::string& name, int n);

GroupPresentation free_product(const GroupPresentation& g,
                               const GroupPresentation& h);
GroupPresentation direct_product(const GroupPresentation& g,
                                 const GroupPresentation& h);

// True iff every relator has zero exponent sum in every generator.
bool is_commutator_relators(const GroupPresentation& g);

// Abelianized Fox derivative of one word: row of Laurent polynomials in
// t_1..t_n with entry j = d(w)/d(x_j).
std::vector<LaurentPoly> fox_row(const Word& w, int ngens);

// m-by-n matrix of abelianized Fox derivatives of the relators.
// Requires is_commutator_relators(g).
std::vector<std::vector<LaurentPoly>> fox_matrix(const GroupPresentation& g);

// JSON round-trip using the token schema x12 / x12^-1.
std::string presentation_to_json(const GroupPresentation& g);
GroupPresentation presentation_from_json(const std::string& text);

}  // namespace grlie
