#include <doctest.h>

#include <random>

#include "grlie/combinatorics.hpp"
#include "grlie/lie.hpp"

using namespace grlie;

namespace {

using Vec = HallBasis::Vec;

Vec add(Vec a, const Vec& b, long long scale = 1) {
  for (auto& [id, c] : b) {
    a[id] += scale * c;
    if (a[id] == 0) a.erase(id);
  }
  return a;
}

Vec bracket_vec(HallBasis& H, const Vec& a, const Vec& b) {
  Vec r;
  for (auto& [u, cu] : a)
    for (auto& [v, cv] : b) r = add(r, H.bracket(u, v), cu * cv);
  return r;
}

}  // namespace

TEST_CASE("basis sizes match the necklace-counting dimensions") {
  for (int n = 2; n <= 3; ++n) {
    HallBasis H(n, 8);
    for (int k = 1; k <= 8; ++k)
      CHECK(Int((long)H.count(k)) == witt(n, k));
  }
  CHECK_THROWS_AS(HallBasis(5, 8, 100), ResourceError);
}

TEST_CASE("bracket is alternating and satisfies the Jacobi identity") {
  HallBasis H(3, 8);
  std::vector<int> small;
  for (int k = 1; k <= 2; ++k)
    for (int id : H.degree_ids(k)) small.push_back(id);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<size_t> pick(0, small.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    int x = small[pick(rng)], y = small[pick(rng)], z = small[pick(rng)];
    CHECK(H.bracket(x, x).empty());
    CHECK(add(H.bracket(x, y), H.bracket(y, x)).empty());
    Vec jac = bracket_vec(H, Vec{{x, 1}}, H.bracket(y, z));
    jac = add(jac, bracket_vec(H, Vec{{y, 1}}, H.bracket(z, x)));
    jac = add(jac, bracket_vec(H, Vec{{z, 1}}, H.bracket(x, y)));
    CHECK(jac.empty());
  }
}

TEST_CASE("graded dimensions of free and abelian quotients") {
  LiePresentation free_lie{3, {}, "free"};
  auto d = graded_dims(free_lie, 7);
  for (int k = 1; k <= 7; ++k)
    CHECK(Int((long)d.dims[k - 1]) == witt(3, k));

  // kill all brackets: dims are n, 0, 0, ...
  auto ab = quadratic_initial_forms(abelian_group(3));
  auto e = graded_dims(ab, 5);
  CHECK(e.dims == std::vector<long long>{3, 0, 0, 0, 0});
}

TEST_CASE("metabelianized dimensions of the free algebra") {
  // theta_1 = n, theta_k = (k-1) C(n+k-2, k) for k >= 2
  for (int n = 2; n <= 4; ++n) {
    LiePresentation L{n, {}, "free"};
    auto d = chen_dims(L, 7);
    CHECK(d.dims[0] == n);
    for (int k = 2; k <= 7; ++k)
      CHECK(Int((long)d.dims[k - 1]) == (k - 1) * binomial(n + k - 2, k));
  }
}

TEST_CASE("dual quadratic presentations have matching shapes") {
  auto a = algebra_family("beer_vP_plus", 4);
  auto L = holonomy_presentation(a);
  CHECK(L.n == a.b1);
  CHECK(L.relators.size() == (size_t)a.b2);
  auto f = holonomy_presentation(algebra_family("free", 3));
  CHECK(f.relators.empty());
  auto d = graded_dims(f, 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(Int((long)d.dims[k - 1]) == witt(3, k));
}

TEST_CASE("quadratic initial forms of commutation relators") {
  // direct product F_2 x Z: relators [x_i, z] give bracket relations
  auto g = direct_product(free_group(2), integers_group());
  auto L = quadratic_initial_forms(g);
  CHECK(L.n == 3);
  CHECK(L.relators.size() == 2);
  auto d = graded_dims(L, 6);
  // Lie algebra = free(2) x abelian(1): dims add in degree >= 2
  for (int k = 2; k <= 6; ++k)
    CHECK(Int((long)d.dims[k - 1]) == witt(2, k));
  CHECK(d.dims[0] == 3);
  CHECK_THROWS_AS(
      quadratic_initial_forms(GroupPresentation{
          {"a"}, {[] { Word w; w.append(0, 1); return w; }()}, "bad"}),
      DomainError);
}

TEST_CASE("Hilbert-series criterion verdicts") {
  auto ok = mildness_check(direct_product(free_group(2), integers_group()), 5);
  CHECK(ok.mild);
  CHECK(ok.first_failure == -1);
  auto bad = mildness_check(vP_plus(4), 3);
  CHECK(!bad.mild);
  CHECK(bad.first_failure == 3);
}
