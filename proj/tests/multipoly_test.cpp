#include <doctest.h>

#include <random>

#include "grlie/multipoly.hpp"

using namespace grlie;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Expo ex(nvars);
    for (int i = 0; i < nvars; ++i) ex[i] = e(rng);
    p.add_term(ex, Scalar((long)c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(rng, 3, 4, 3);
    auto b = random_poly(rng, 3, 4, 3);
    auto c = random_poly(rng, 3, 4, 3);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("degree bookkeeping") {
  MultiPoly p(2);
  p.add_term({1, 0}, Scalar(2));
  p.add_term({1, 2}, Scalar(-1));
  CHECK(p.total_degree() == 3);
  CHECK(p.min_degree() == 1);
  CHECK(!p.is_homogeneous());
  CHECK(p.homogeneous_component(1) == MultiPoly::variable(2, 0) * Scalar(2));
  int d = -1;
  MultiPoly h = p.homogeneous_component(3);
  CHECK(h.is_homogeneous(&d));
  CHECK(d == 3);
  CHECK(MultiPoly(2).total_degree() == -1);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::vector<Scalar> pt = {Scalar(2), Scalar(-1) / 3, Scalar(5) / 7};
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(rng, 3, 4, 3);
    auto b = random_poly(rng, 3, 4, 3);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("substitution composes with evaluation") {
  std::mt19937_64 rng(11);
  auto f = random_poly(rng, 2, 5, 3);
  std::vector<MultiPoly> vals = {random_poly(rng, 3, 3, 2),
                                 random_poly(rng, 3, 3, 2)};
  auto g = f.substitute(vals, 3);
  std::vector<Scalar> pt = {Scalar(1) / 2, Scalar(-3), Scalar(2) / 5};
  CHECK(g.eval(pt) == f.eval({vals[0].eval(pt), vals[1].eval(pt)}));
}

TEST_CASE("primitive part and exact division") {
  MultiPoly f(2);
  f.add_term({2, 0}, Scalar(4) / 6);
  f.add_term({0, 2}, Scalar(-2) / 6);
  auto p = f.primitive_part();
  // content removed: coefficients become 2 and -1 up to overall sign
  CHECK(p * Scalar(1) == p);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(rng, 2, 3, 2);
    auto b = random_poly(rng, 2, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).exact_divide(b) == a);
  }
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK_THROWS_AS((x * x + y).exact_divide(x), DomainError);
}

TEST_CASE("Laurent minimum exponents and unit shifts") {
  LaurentPoly f(2);
  f.add_term({-2, 1}, Scalar(1));
  f.add_term({0, -3}, Scalar(5));
  CHECK(f.min_exponents() == Expo{-2, -3});
  auto g = f.shift({2, 3});
  CHECK(g.min_exponents() == Expo{0, 0});
  CHECK(f.eval({Scalar(2), Scalar(3)}) * Scalar(4) * Scalar(27) ==
        g.eval({Scalar(2), Scalar(3)}));
}

TEST_CASE("shifted-variable substitution") {
  // t1^2 t2 with t_i = 1 + x_i
  LaurentPoly f(2);
  f.add_term({2, 1}, Scalar(1));
  MultiPoly g = f.substitute_one_plus_x();
  CHECK(g.eval({Scalar(1), Scalar(2)}) == Scalar(12));  // (1+1)^2 (1+2)
  CHECK(g.eval({Scalar(0), Scalar(0)}) == Scalar(1));
  LaurentPoly bad(1);
  bad.add_term({-1}, Scalar(1));
  CHECK_THROWS_AS(bad.substitute_one_plus_x(), DomainError);
}
