#include <doctest.h>

#include <random>

#include "grlie/groebner.hpp"

using namespace grlie;

namespace {

MultiPoly mono(int nvars, Expo e, long c = 1) {
  MultiPoly p(nvars);
  p.add_term(e, Scalar(c));
  return p;
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g,
                const MonomialOrder& o) {
  auto [ef, cf] = leading_term(f, o);
  auto [eg, cg] = leading_term(g, o);
  Expo lcm(ef.size());
  for (size_t i = 0; i < ef.size(); ++i) lcm[i] = std::max(ef[i], eg[i]);
  Expo mf = lcm, mg = lcm;
  for (size_t i = 0; i < ef.size(); ++i) {
    mf[i] -= ef[i];
    mg[i] -= eg[i];
  }
  return mono((int)ef.size(), mf) * f * (Scalar(1) / cf) -
         mono((int)ef.size(), mg) * g * (Scalar(1) / cg);
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-4, 4);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Expo ex(nvars);
    for (int i = 0; i < nvars; ++i) ex[i] = e(rng);
    p.add_term(ex, Scalar((long)c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("leading terms under both orders") {
  // f = x^2 y + x y^3
  MultiPoly f = mono(2, {2, 1}) + mono(2, {1, 3});
  MonomialOrder gr;  // graded reverse lex
  CHECK(leading_term(f, gr).first == Expo{1, 3});
  MonomialOrder lx{MonomialOrder::lex, {}};
  CHECK(leading_term(f, lx).first == Expo{2, 1});
  MonomialOrder lx2{MonomialOrder::lex, {1, 0}};  // read y first
  CHECK(leading_term(f, lx2).first == Expo{1, 3});
}

TEST_CASE("every S-polynomial of a computed basis reduces to zero") {
  std::mt19937_64 rng(11);
  MonomialOrder o;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, 3, 3, 2));
    auto gb = buchberger(gens, o);
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(spoly(gb[i], gb[j], o), gb, o).is_zero());
    // the original generators lie in the ideal of the basis
    for (auto& g : gens) CHECK(normal_form(g, gb, o).is_zero());
    // reduced: no leading term divides a monomial of another element
    for (size_t i = 0; i < gb.size(); ++i) {
      CHECK(leading_term(gb[i], o).second == Scalar(1));
      for (size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        auto lt = leading_term(gb[j], o).first;
        for (auto& [e, c] : gb[i].terms()) {
          bool divides = true;
          for (size_t v = 0; v < e.size(); ++v)
            if (e[v] < lt[v]) divides = false;
          CHECK(!divides);
        }
      }
    }
  }
}

TEST_CASE("membership in simple ideals") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  Ideal I(2, {x * x - y});
  CHECK(ideal_membership(x * x * x - x * y, I));
  CHECK(!ideal_membership(x, I));
  CHECK(!ideal_membership(y, I));
  Ideal J(2, {x * x, x * y + y * y});
  CHECK(!ideal_membership(x, J));
  CHECK(radical_membership(x, J));
  CHECK(radical_membership(y, J));  // y^3 = y(xy+y^2) - x(xy) + x^2 y
  CHECK(!radical_membership(x + MultiPoly::constant(2, Scalar(1)), J));
}

TEST_CASE("variety dimensions of textbook ideals") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK(krull_dimension(Ideal(2, {})) == 2);
  CHECK(krull_dimension(Ideal(2, {MultiPoly::constant(2, Scalar(3))})) == -1);
  CHECK(krull_dimension(Ideal(2, {x})) == 1);
  CHECK(krull_dimension(Ideal(2, {x, y})) == 0);
  CHECK(krull_dimension(
            Ideal(2, {x * x + y * y - MultiPoly::constant(2, Scalar(1))})) ==
        1);
  MultiPoly z = MultiPoly::variable(3, 2);
  MultiPoly x3 = MultiPoly::variable(3, 0), y3 = MultiPoly::variable(3, 1);
  CHECK(krull_dimension(Ideal(3, {x3 * y3, x3 * z})) == 2);  // plane + line
}

TEST_CASE("the cached basis is stable across calls") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  Ideal I(2, {x * y - MultiPoly::constant(2, Scalar(1)), x * x});
  const auto& g1 = I.groebner();
  const auto& g2 = I.groebner();
  CHECK(&g1 == &g2);
  // xy = 1 and x^2 = 0 force 1 = 0
  CHECK(g1.size() == 1);
  CHECK(g1[0] == MultiPoly::constant(2, Scalar(1)));
}
