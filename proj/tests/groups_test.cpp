#include <doctest.h>

#include <random>

#include "grlie/groups.hpp"

using namespace grlie;

namespace {

Word random_word(std::mt19937_64& rng, int ngens, int len) {
  std::uniform_int_distribution<int> g(0, ngens - 1), s(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) w.append(g(rng), s(rng) ? 1 : -1);
  return w;
}

// t^a - 1 as a Laurent polynomial in ngens variables
LaurentPoly t_power_minus_one(const std::vector<long long>& a, int ngens) {
  Expo e(ngens);
  for (int i = 0; i < ngens; ++i) e[i] = (int)a[i];
  LaurentPoly f = LaurentPoly::monomial(ngens, e, Scalar(1));
  return f - LaurentPoly::constant(ngens, Scalar(1));
}

LaurentPoly t_power(const std::vector<long long>& a, int ngens) {
  Expo e(ngens);
  for (int i = 0; i < ngens; ++i) e[i] = (int)a[i];
  return LaurentPoly::monomial(ngens, e, Scalar(1));
}

}  // namespace

TEST_CASE("words freely reduce") {
  Word w;
  w.append(0, 1);
  w.append(1, 1);
  w.append(1, -1);
  w.append(0, -1);
  CHECK(w.empty());
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Word u = random_word(rng, 3, 12);
    Word v = u;
    v.append(u.inverse());
    CHECK(v.empty());
    CHECK(u.inverse().inverse() == u);
  }
}

TEST_CASE("commutators have zero exponent sums") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Word a = random_word(rng, 3, 6), b = random_word(rng, 3, 6);
    Word c = commutator(a, b);
    for (long long s : c.abelianized(3)) CHECK(s == 0);
  }
}

TEST_CASE("free derivative satisfies the fundamental identity") {
  // sum_j d(w)/d(x_j) (t_j - 1) = t^{ab(w)} - 1
  std::mt19937_64 rng(99);
  int n = 3;
  for (int trial = 0; trial < 25; ++trial) {
    Word w = random_word(rng, n, 10);
    auto row = fox_row(w, n);
    LaurentPoly acc(n);
    for (int j = 0; j < n; ++j) {
      Expo e(n, 0);
      e[j] = 1;
      LaurentPoly tj_minus_1 =
          LaurentPoly::monomial(n, e, Scalar(1)) -
          LaurentPoly::constant(n, Scalar(1));
      acc = acc + row[j] * tj_minus_1;
    }
    CHECK(acc == t_power_minus_one(w.abelianized(n), n));
  }
}

TEST_CASE("free derivative satisfies the product rule") {
  // d(uv) = d(u) + t^{ab(u)} d(v)
  std::mt19937_64 rng(123);
  int n = 3;
  for (int trial = 0; trial < 25; ++trial) {
    Word u = random_word(rng, n, 8), v = random_word(rng, n, 8);
    Word uv = u;
    uv.append(v);
    auto du = fox_row(u, n), dv = fox_row(v, n), duv = fox_row(uv, n);
    LaurentPoly tu = t_power(u.abelianized(n), n);
    for (int j = 0; j < n; ++j) CHECK(duv[j] == du[j] + tu * dv[j]);
  }
}

TEST_CASE("built-in families have the expected shapes") {
  CHECK(free_group(4).ngens() == 4);
  CHECK(free_group(4).relators.empty());
  CHECK(abelian_group(3).relators.size() == 3);
  CHECK(vP(3).ngens() == 6);
  CHECK(vP(3).relators.size() == 6);
  CHECK(vP(4).ngens() == 12);
  CHECK(vP_plus(4).ngens() == 6);
  CHECK(vP_plus(4).relators.size() == 7);
  CHECK(vP_plus(6).ngens() == 15);
  CHECK(vP_plus(6).relators.size() == 65);
  CHECK(pbar4().ngens() == 5);
  CHECK(pbar4().relators.size() == 6);
  for (auto* g : {"free", "vP", "vP_plus"}) {
    auto p = family(g, 3);
    p.validate();
    CHECK(is_commutator_relators(p));
  }
  CHECK(is_commutator_relators(pbar4()));
}

TEST_CASE("products of presentations") {
  auto f = free_product(free_group(2), abelian_group(2));
  CHECK(f.ngens() == 4);
  CHECK(f.relators.size() == 1);
  auto d = direct_product(free_group(2), integers_group());
  CHECK(d.ngens() == 3);
  CHECK(d.relators.size() == 2);  // new generator commutes with both old ones
  d.validate();
  CHECK(is_commutator_relators(d));
}

TEST_CASE("derivative matrix dimensions and degree-zero vanishing") {
  auto g = vP_plus(4);
  auto m = fox_matrix(g);
  CHECK(m.size() == g.relators.size());
  for (auto& row : m) {
    CHECK(row.size() == (size_t)g.ngens());
    // evaluating at t = 1 kills every entry (zero exponent sums)
    std::vector<Scalar> ones(g.ngens(), Scalar(1));
    for (auto& e : row) CHECK(is_zero(e.eval(ones)));
  }
}

TEST_CASE("JSON round-trip preserves the presentation") {
  for (auto g : {vP(3), vP_plus(4), pbar4(), free_group(3)}) {
    auto h = presentation_from_json(presentation_to_json(g));
    CHECK(h.generators == g.generators);
    CHECK(h.relators == g.relators);
  }
  CHECK_THROWS_AS(presentation_from_json("{ \"generators\": ["), DomainError);
  CHECK_THROWS_AS(presentation_from_json("{\"generators\":[\"x1\"],"
                                         "\"relators\":[[\"x2\"]]}"),
                  DomainError);
}
