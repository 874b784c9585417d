#include <doctest.h>

#include "grlie/biseries.hpp"
#include "grlie/combinatorics.hpp"
#include "grlie/unipoly.hpp"

using namespace grlie;

namespace {
UniPoly up(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  return UniPoly(std::move(s));
}
}  // namespace

TEST_CASE("polynomial arithmetic") {
  UniPoly a = up({1, 2, 3}), b = up({0, -1});
  CHECK((a * b).coeff(3) == Scalar(-3));
  CHECK((a + b).coeff(1) == Scalar(1));
  CHECK((a - a).is_zero());
  CHECK(a.eval(Scalar(2)) == Scalar(17));
  CHECK(up({0}).is_zero());
  CHECK(a.str() == "1 + 2*t + 3*t^2");
}

TEST_CASE("rational-function expansion inverts multiplication") {
  UniPoly num = up({9, -20, 15, 0, -4, 1});
  UniPoly den = up({1, -2, 1});
  auto c = series_expand(UniRationalFunction(num, den), 12);
  // multiply the series back by the denominator and compare with num
  for (int k = 0; k <= 12; ++k) {
    Scalar acc(0);
    for (int i = 0; i <= k && i <= den.degree(); ++i)
      acc += den.coeff(i) * c[k - i];
    CHECK(acc == num.coeff(k));
  }
}

TEST_CASE("expansion requires an invertible constant term") {
  CHECK_THROWS_AS(series_expand(UniRationalFunction(up({1}), up({0, 1})), 3),
                  DomainError);
  CHECK_THROWS_AS(UniRationalFunction(up({1}), up({})), DomainError);
}

TEST_CASE("truncated series inverse is a two-sided inverse") {
  std::vector<Scalar> a = {Scalar(2), Scalar(-1), Scalar(5), Scalar(0),
                           Scalar(7)};
  auto inv = series_inverse(a, 9);
  auto prod = series_mul(a, inv, 9);
  CHECK(prod[0] == Scalar(1));
  for (int i = 1; i <= 9; ++i) CHECK(is_zero(prod[i]));
}

TEST_CASE("bivariate exponential of u has factorial denominators") {
  BiSeries x(8, 8);
  x.set_coeff(1, 0, Scalar(1));  // the series u
  BiSeries e = BiSeries::exp(x);
  for (int n = 0; n <= 8; ++n)
    CHECK(e.coeff(n, 0) * Scalar(factorial(n)) == Scalar(1));
}

TEST_CASE("bivariate exponential rejects nonzero constant term") {
  BiSeries x(3, 3);
  x.set_coeff(0, 0, Scalar(1));
  CHECK_THROWS_AS(BiSeries::exp(x), DomainError);
}

TEST_CASE("generating-series builders have the advertised coefficients") {
  int U = 7, T = 7;
  auto g1 = BiSeries::u_over_one_minus_tu(U, T);          // sum t^k u^{k+1}
  auto g2 = BiSeries::neg_log_one_minus_tu_over_t(U, T);  // sum u^n t^{n-1}/n
  auto g3 = BiSeries::exp_tu_minus_one_over_t(U, T);      // sum u^n t^{n-1}/n!
  for (int n = 0; n <= U; ++n)
    for (int k = 0; k <= T; ++k) {
      CHECK(g1.coeff(n, k) == Scalar(n == k + 1 ? 1 : 0));
      if (n >= 1) {
        CHECK(g2.coeff(n, k) ==
              (k == n - 1 ? Scalar(1) / Scalar((long)n) : Scalar(0)));
        CHECK(g3.coeff(n, k) ==
              (k == n - 1 ? Scalar(1) / Scalar(factorial(n)) : Scalar(0)));
      }
    }
}

TEST_CASE("exp turns sums into products") {
  BiSeries a(6, 6), b(6, 6);
  a.set_coeff(1, 1, Scalar(2));
  a.set_coeff(2, 0, Scalar(-1));
  b.set_coeff(1, 2, Scalar(1));
  b.set_coeff(3, 1, Scalar(5));
  BiSeries lhs = BiSeries::exp(a + b);
  BiSeries rhs = BiSeries::exp(a) * BiSeries::exp(b);
  CHECK(lhs == rhs);
}
