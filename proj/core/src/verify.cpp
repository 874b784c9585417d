#include "grlie/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "grlie/alexander.hpp"
#include "grlie/cohomology.hpp"
#include "grlie/combinatorics.hpp"
#include "grlie/groups.hpp"
#include "grlie/lie.hpp"
#include "grlie/resonance.hpp"
#include "grlie/unipoly.hpp"

namespace grlie {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream os;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    os << "FAIL: " << what << "\n";
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    pass = false;
    os << "FAIL: " << what << "\n";
  }
};

std::vector<Scalar> taylor(const UniPoly& num, const UniPoly& den, int D) {
  return series_expand(UniRationalFunction(num, den), D);
}

UniPoly upoly(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  return UniPoly(std::move(s));
}

UniPoly one_minus_t_power(int n) {  // (1-t)^n
  UniPoly p = upoly({1});
  UniPoly f = upoly({1, -1});
  for (int i = 0; i < n; ++i) p = p * f;
  return p;
}

bool scalar_is(const Scalar& s, long long v) {
  return s.get_den() == 1 && s.get_num() == Int((long)v);
}

// Betti numbers b_1..b_top of a family's closed-form Poincare polynomial.
std::vector<long long> betti_of(const std::string& fam, int n) {
  UniPoly p = poincare_closed(fam, n);
  std::vector<long long> b;
  for (int i = 1; i <= p.degree(); ++i) b.push_back(p.coeff(i).get_num().get_si());
  return b;
}

// theta_2.. theta_{D+2} from the graded dimensions of an Alexander-type
// module (dimension in degree k equals theta_{k+2}).
std::vector<long long> theta_of_group(const GroupPresentation& g, int D,
                                      std::uint64_t seed) {
  return gr_hilbert(alexander_presentation(g), D, seed);
}

// ---------------------------------------------------------------- criteria

Check c1_poincare() {
  Check c;
  c.expect_eq(poincare_closed("P", 4), upoly({1, 6, 11, 6}),
              "Poincare polynomial of P_4");
  c.expect_eq(poincare_closed("vP", 3), upoly({1, 6, 6}),
              "Poincare polynomial of vP_3");
  c.expect_eq(poincare_closed("vP_plus", 4), upoly({1, 6, 7, 1}),
              "Poincare polynomial of vP_4^+");
  c.expect_eq(poincare_closed("vP", 4), upoly({1, 12, 36, 24}),
              "Poincare polynomial of vP_4");
  // cross-check the closed forms against the defining recurrences
  for (int n = 2; n <= 6; ++n) {
    UniPoly p = upoly({1});
    for (int k = 1; k < n; ++k) p = p * upoly({1, (long)k});
    c.expect_eq(poincare_closed("P", n), p, "product formula for P_n");
    for (int i = 0; i <= n - 1; ++i) {
      c.expect_eq(poincare_closed("vP_plus", n).coeff(i),
                  Scalar(special_number(SpecialKind::stirling2, n, n - i)),
                  "set-partition coefficients of vP_n^+");
      c.expect_eq(poincare_closed("vP", n).coeff(i),
                  Scalar(special_number(SpecialKind::lah, n, n - i)),
                  "ordered-partition coefficients of vP_n");
    }
  }
  return c;
}

Check c2_egf() {
  Check c;
  for (const char* fam : {"P", "vP", "vP_plus"}) {
    auto r = egf_identity_check(fam, 7);
    c.expect(r.ok, std::string("exponential generating function for ") + fam +
                       ": " + r.report);
  }
  return c;
}

Check c3_enveloping() {
  Check c;
  // Hilb U(gr(vP_3^+)) = 1/(1 - 3t + t^2): every other Fibonacci number
  auto h = series_inverse({Scalar(1), Scalar(-3), Scalar(1)}, 10);
  std::vector<long long> fib = {1, 1};
  while (fib.size() < 25) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (int i = 0; i <= 10; ++i)
    c.expect(scalar_is(h[i], fib[2 * i + 1]),
             "enveloping-algebra series of vP_3^+ vs Fibonacci");
  // Hilb U(gr(P_{n+1})) = prod 1/(1-kt): Stirling set numbers S(n+i, n)
  for (int n = 1; n <= 4; ++n) {
    std::vector<Scalar> s(9, Scalar(0));
    s[0] = 1;
    for (int k = 1; k <= n; ++k) {
      std::vector<Scalar> f(9);  // 1/(1-kt) has coefficients k^j
      Scalar pw(1);
      for (int j = 0; j <= 8; ++j) {
        f[j] = pw;
        pw *= Scalar((long)k);
      }
      s = series_mul(s, f, 8);
    }
    for (int i = 0; i <= 8; ++i)
      c.expect_eq(s[i], Scalar(special_number(SpecialKind::stirling2, n + i, n)),
                  "enveloping-algebra series of the braid quotient tower");
  }
  return c;
}

Check c4_lcs_routes() {
  Check c;
  std::vector<std::pair<std::string, std::vector<long long>>> cases = {
      {"P_4", {6, 11, 6}},
      {"vP_3", {6, 6}},
      {"vP_3^+", {3, 1}},
      {"vP_4^+", {6, 7, 1}}};
  for (const auto& [name, b] : cases) {
    auto m = lcs_ranks_mobius(b, 10);
    auto p = lcs_ranks_pbw(b, 10);
    auto w = lcs_ranks_powersum(b, 10);
    c.expect(m.phi == p.phi && m.phi == w.phi,
             "three lower-central-rank routes disagree for " + name);
  }
  // phi_k(P_n) = sum over free-group ranks s < n
  for (int n = 2; n <= 5; ++n) {
    auto phi = lcs_ranks_mobius(betti_of("P", n), 10).phi;
    for (int k = 1; k <= 10; ++k) {
      Int want(0);
      for (int s = 1; s < n; ++s) want += witt(s, k);
      c.expect(Int((long)phi[k - 1]) == want,
               "braid-group ranks vs sum of free-group ranks");
    }
  }
  return c;
}

Check c5_holonomy_dims(std::uint64_t seed) {
  Check c;
  auto g3 = graded_dims(holonomy_presentation(algebra_family("beer_vP_plus", 3)),
                        6, seed);
  c.expect_eq(g3.dims, lcs_ranks_pbw({3, 1}, 6).phi,
              "holonomy dimensions of vP_3^+ vs dual-series extraction");
  auto g4 = graded_dims(holonomy_presentation(algebra_family("beer_vP_plus", 4)),
                        5, seed);
  c.expect_eq(g4.dims, lcs_ranks_pbw({6, 7, 1}, 5).phi,
              "holonomy dimensions of vP_4^+ vs dual-series extraction");
  return c;
}

Check c6_mildness(std::uint64_t seed) {
  Check c;
  std::vector<std::pair<GroupPresentation, std::string>> mild_cases = {
      {vP(3), "vP_3"},
      {vP_plus(3), "vP_3^+"},
      {direct_product(free_group(2), integers_group()), "P_3"}};
  for (auto& [g, name] : mild_cases) {
    auto m = mildness_check(g, 6, seed);
    c.expect(m.mild,
             "expected mild presentation for " + name + ": " + m.report);
  }
  std::vector<std::pair<GroupPresentation, std::string>> wild_cases = {
      {vP_plus(4), "vP_4^+"}, {vP(4), "vP_4"}};
  for (auto& [g, name] : wild_cases) {
    auto m = mildness_check(g, 3, seed);
    c.expect(!m.mild && m.first_failure == 3,
             "expected mildness failure at degree 3 for " + name + ": " +
                 m.report);
  }
  return c;
}

// published coordinate order e12,e13,e23,e14,e24,e34 -> internal lex order
constexpr int kPerm4[6] = {0, 1, 3, 2, 4, 5};

std::vector<std::vector<int>> thirteen_lines() {
  return {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
          {1, -1, 1, 0, 0, 0}, {1, 0, 0, -1, 1, 0}, {0, 1, 0, -1, 0, 1},
          {0, 0, 1, 0, -1, 1}, {0, 1, -1, -1, 1, 0}, {1, 0, 1, -1, 0, 1},
          {1, -1, 0, 0, 1, -1}};
}

Check c7_resonance_vp4plus(std::uint64_t seed) {
  Check c;
  auto A = algebra_family("beer_vP_plus", 4);
  auto M = aomoto_matrix(A);

  // published 7x6 matrix, rows over variables x12,x13,x23,x14,x24,x34
  auto X = [&](int i) { return MultiPoly::variable(6, kPerm4[i]); };
  MultiPoly x12 = X(0), x13 = X(1), x23 = X(2), x14 = X(3), x24 = X(4),
            x34 = X(5), z(6);
  std::vector<std::vector<MultiPoly>> printed = {
      {-x34, z, z, z, z, x12},
      {-x13 - x23, x12 - x23, x12 + x13, z, z, z},
      {z, -x24, z, z, x13, z},
      {z, z, -x14, x23, z, z},
      {-x14 - x24, z, z, x12 - x24, x12 + x14, z},
      {z, -x14 - x34, z, x13 - x34, z, x13 + x14},
      {z, z, -x24 - x34, z, x23 - x34, x23 + x24}};
  for (auto& row : printed) {  // columns to internal order
    std::vector<MultiPoly> r(6, z);
    for (int j = 0; j < 6; ++j) r[kPerm4[j]] = row[j];
    row = r;
  }
  std::vector<bool> used(7, false);
  bool rows_ok = M.b2 == 7 && M.b1 == 6;
  for (auto& row : printed) {
    bool found = false;
    for (int r = 0; r < 7 && !found; ++r) {
      if (used[r]) continue;
      bool eq = true, neq = true;
      for (int j = 0; j < 6; ++j) {
        if (!(M.rows[r][j] == row[j])) eq = false;
        if (!(M.rows[r][j] == -row[j])) neq = false;
      }
      if (eq || neq) {
        used[r] = true;
        found = true;
      }
    }
    rows_ok = rows_ok && found;
  }
  c.expect(rows_ok, "generated differential matches the published matrix up to "
                    "row permutation and sign");

  auto I1 = resonance_ideal(A, 1);
  c.expect_eq(krull_dimension(I1), 4, "depth-1 resonance dimension of vP_4^+");
  std::vector<MultiPoly> eqs = {
      x12 * x24 * (x13 + x23) + x13 * x34 * (x12 - x23) -
          x24 * x34 * (x12 + x13),
      x12 * x23 * (x14 + x24) + x12 * x34 * (x23 - x14) +
          x14 * x34 * (x23 + x24),
      x13 * x23 * (x14 + x24) + x14 * x24 * (x13 + x23) +
          x34 * (x13 * x23 - x14 * x24),
      x12 * (x13 * x14 - x23 * x24) + x34 * (x13 * x23 - x14 * x24)};
  for (size_t i = 0; i < eqs.size(); ++i)
    c.expect(radical_membership(eqs[i], I1),
             "published cubic not in the radical of the depth-1 ideal");

  auto lines = thirteen_lines();
  for (auto& ln : lines) {
    LinearSubspaceParam L;
    L.b1 = 6;
    std::vector<Scalar> v(6, Scalar(0));
    for (int j = 0; j < 6; ++j) v[kPerm4[j]] = Scalar((long)ln[j]);
    L.spans.push_back(v);
    c.expect(subspace_in_resonance(A, L, 2),
             "published line fails depth-2 membership");
  }

  auto I2 = resonance_ideal(A, 2);
  c.expect_eq(krull_dimension(I2), 1, "depth-2 resonance dimension of vP_4^+");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    auto& ln = lines[t % lines.size()];
    Scalar s((long)num(rng));
    s /= Scalar((long)den(rng));
    if (is_zero(s)) continue;
    std::vector<Scalar> pt(6, Scalar(0));
    for (int j = 0; j < 6; ++j) pt[kPerm4[j]] = s * Scalar((long)ln[j]);
    if (aomoto_b1(A, pt) >= 3) ++bad;
  }
  c.expect_eq(bad, 0, "nonzero depth-3 point found on the thirteen lines");
  return c;
}

Check c8_resonance_vp3(std::uint64_t seed) {
  Check c;
  auto A = algebra_family("beer_vP", 3);
  c.expect(resonance_ideal(A, 1).gens.empty(),
           "depth-1 resonance ideal of vP_3 should be zero");

  auto mk = [&](std::vector<std::vector<int>> vs) {
    LinearSubspaceParam L;
    L.b1 = 6;
    for (auto& v : vs) {
      std::vector<Scalar> w(6);
      for (int i = 0; i < 6; ++i) w[i] = Scalar((long)v[i]);
      L.spans.push_back(w);
    }
    return L;
  };
  // coordinates x12,x13,x23,x21,x31,x32
  std::vector<LinearSubspaceParam> subs = {
      mk({{1, 0, 1, -1, 0, -1}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}),
      mk({{0, 1, -1, 0, 0, 0}, {1, 0, 0, 0, 0, -1}, {0, 0, 0, 1, -1, 0}}),
      mk({{0, 1, -1, 0, -1, 1}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}),
      mk({{1, -1, 0, -1, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}}),
      mk({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}})};
  for (size_t i = 0; i < subs.size(); ++i)
    c.expect(subspace_in_resonance(A, subs[i], 2),
             "published 3-plane fails depth-2 membership");
  c.expect(subspace_in_resonance(A, mk({{1, -1, 1, -1, 1, -1}}), 5),
           "common intersection line fails depth-5 membership");

  auto rep = lemma_resonance2_check(pbar4_algebra(), 100, seed);
  c.expect(rep.ok, "pointwise degree-2 Betti identity: " + rep.report);
  return c;
}

Check c9_chen_free(std::uint64_t seed) {
  Check c;
  for (int n = 2; n <= 5; ++n) {
    auto dims = theta_of_group(free_group(n), 8, seed);
    // (1 - (1-nt)/(1-t)^n) / t^2
    UniPoly num = one_minus_t_power(n) - upoly({1, -(long)n});
    auto want = taylor(num, one_minus_t_power(n), 10);
    for (int k = 0; k <= 8; ++k)
      c.expect(scalar_is(want[k + 2], dims[k]),
               "free-group module dimensions vs closed rational form");
    for (int k = 2; k <= 10; ++k)
      c.expect(Int((long)dims[k - 2]) ==
                   theta_closed(ThetaFamily::free_grp, n, k),
               "free-group Chen ranks closed form");
  }
  return c;
}

Check c10_chen_vp3(std::uint64_t seed) {
  Check c;
  auto dims = theta_of_group(free_product(pbar4(), integers_group()), 8, seed);
  auto want = taylor(upoly({9, -20, 15, 0, -4, 1}), one_minus_t_power(6), 8);
  for (int k = 0; k <= 8; ++k)
    c.expect(scalar_is(want[k], dims[k]),
             "Chen ranks of vP_3 vs published rational function");
  return c;
}

Check c11_chen_pbar4(std::uint64_t seed) {
  Check c;
  auto dims = theta_of_group(pbar4(), 8, seed);
  c.expect_eq(dims[0], 4LL, "theta_2 of the quotient braid group");
  for (int k = 3; k <= 10; ++k)
    c.expect_eq(dims[k - 2], 5LL * (k - 1),
                "theta_k of the quotient braid group");
  return c;
}

Check c12_holonomy_chen(std::uint64_t seed) {
  Check c;
  auto M4 = alexander_presentation(vP_plus(4));
  auto lin4 = graded_hilbert(linearized_presentation(M4), 6, seed);
  auto w4 = taylor(upoly({8, -3, 1}), one_minus_t_power(4), 6);
  for (int k = 0; k <= 6; ++k)
    c.expect(scalar_is(w4[k], lin4[k]), "linearized module of vP_4^+");

  auto lin5 = graded_hilbert(
      linearized_presentation(alexander_presentation(vP_plus(5))), 3, seed);
  auto w5 = taylor(upoly({20, 15, 5}), one_minus_t_power(4), 3);
  for (int k = 0; k <= 3; ++k)
    c.expect(scalar_is(w5[k], lin5[k]), "linearized module of vP_5^+");

  auto lin6 = graded_hilbert(
      linearized_presentation(alexander_presentation(vP_plus(6))), 0, seed);
  c.expect_eq(lin6[0], 40LL, "linearized module of vP_6^+ in degree zero");

  c.expect_eq(gr_hilbert(M4, 6, seed), lin4,
              "filtered vs linearized dimensions for vP_4^+");
  return c;
}

Check c13_chen_formula(std::uint64_t seed) {
  Check c;
  ThetaSeries pbar{theta_of_group(pbar4(), 8, seed)};
  auto v1 = chen_formula_test(pbar, {{2, 5}}, 3, 8);
  c.expect(v1.holds, "Chen ranks formula for the quotient braid group: " +
                         v1.report);

  ThetaSeries vp3{theta_of_group(free_product(pbar4(), integers_group()), 8,
                                 seed)};
  auto v2 = chen_formula_test(vp3, {{6, 1}}, 3, 10);
  c.expect(!v2.holds && v2.first_failure == 3,
           "Chen ranks formula unexpectedly holds for vP_3");
  auto diff = taylor(upoly({-6, 0, 0, 6, -5, 1}), one_minus_t_power(6), 8);
  for (int k = 2; k <= 10; ++k) {
    Int lhs = Int((long)vp3.at(k)) - theta_closed(ThetaFamily::free_grp, 6, k);
    c.expect(Scalar(lhs) == diff[k - 2],
             "vP_3 discrepancy vs published difference series");
  }

  for (int n : {3, 4}) {
    GroupPresentation g =
        free_product(integers_group(), abelian_group(n - 1));
    ThetaSeries th{theta_of_group(g, 8, seed)};
    // closed series: t (1 - (1-t)^{n-1}) / (1-t)^n
    UniPoly num = (upoly({1}) - one_minus_t_power(n - 1)) * upoly({0, 1});
    auto want = taylor(num, one_minus_t_power(n), 10);
    for (int k = 2; k <= 10; ++k)
      c.expect(scalar_is(want[k], th.at(k)),
               "free-product-with-torus Chen ranks closed form");
    auto v = chen_formula_test(th, {{n, 1}}, 3, 10);
    c.expect(!v.holds, "Chen ranks formula unexpectedly holds for Z * Z^k");
    for (int k = 2; k <= 8; ++k) {
      Int gap = theta_closed(ThetaFamily::free_grp, n, k) - Int((long)th.at(k));
      Int partial(0);
      for (int i = 2; i <= k; ++i)
        partial += theta_closed(ThetaFamily::free_grp, n - 1, i);
      c.expect(gap == partial, "free-product discrepancy telescoping sum");
    }
  }

  ThetaSeries vp4{gr_hilbert(alexander_presentation(vP_plus(4)), 6, seed)};
  auto v3 = chen_formula_test(vp4, {{4, 1}}, 3, 8);
  c.expect(!v3.holds, "Chen ranks formula unexpectedly holds for vP_4^+");
  return c;
}

Check c14_properties(std::uint64_t seed) {
  Check c;
  // Fox fundamental identity: sum_j d(w)/d(x_j) (t_j - 1) = 0 for every
  // relator of every built-in presentation
  std::vector<GroupPresentation> gs = {vP(3),      vP(4),    vP_plus(3),
                                       vP_plus(4), vP_plus(5), pbar4(),
                                       abelian_group(3)};
  for (const auto& g : gs) {
    int n = g.ngens();
    for (const auto& w : g.relators) {
      auto row = fox_row(w, n);
      LaurentPoly acc(n);
      for (int j = 0; j < n; ++j) {
        Expo e(n, 0);
        e[j] = 1;
        LaurentPoly tj = LaurentPoly::monomial(n, e, Scalar(1));
        acc = acc + row[j] * (tj - LaurentPoly::constant(n, Scalar(1)));
      }
      c.expect(acc.is_zero(), "Fox fundamental identity violated in " + g.label);
    }
  }

  // Koszul complex: consecutive differentials compose to zero
  for (int n = 2; n <= 8; ++n)
    for (int p = 2; p <= n; ++p) {
      auto dp = koszul_differential(n, p);
      auto dq = koszul_differential(n, p - 1);
      for (const auto& col : dp) {
        std::vector<MultiPoly> res(dq[0].size(), MultiPoly(n));
        for (size_t m = 0; m < col.size(); ++m) {
          if (col[m].is_zero()) continue;
          for (size_t r = 0; r < res.size(); ++r)
            res[r] = res[r] + dq[m][r] * col[m];
        }
        for (const auto& x : res)
          c.expect(x.is_zero(), "Koszul differentials do not compose to zero");
      }
    }
  // lift postcondition is re-verified inside koszul_lift; exercise it on
  // every built-in commutator-relators presentation
  for (const auto& g : gs)
    if (is_commutator_relators(g)) alexander_presentation(g);

  // theta additivity under direct products
  auto prod = theta_of_group(direct_product(abelian_group(2), free_group(2)),
                             6, seed);
  auto f2 = theta_of_group(free_group(2), 6, seed);
  c.expect_eq(prod, f2, "theta additivity for Z^2 x F_2");
  auto pz = theta_of_group(direct_product(pbar4(), integers_group()), 5, seed);
  auto pb = theta_of_group(pbar4(), 5, seed);
  c.expect_eq(pz, pb, "theta additivity for the quotient braid group times Z");

  // Aomoto Betti product/coproduct formulas on sampled points
  auto r1 = betti_formula_check(pbar4_algebra(), algebra_family("free", 1), 9,
                                seed);
  c.expect(r1.ok, "product/coproduct Betti formulas: " + r1.report);
  auto r2 = betti_formula_check(algebra_family("abelian", 2),
                                algebra_family("free", 2), 8, seed + 1);
  c.expect(r2.ok, "product/coproduct Betti formulas: " + r2.report);

  c.os << "large eliminations certified by double-prime agreement "
          "throughout (structural)\n";
  return c;
}

}  // namespace

std::vector<std::pair<int, std::string>> acceptance_criteria() {
  return {
      {1, "closed-form Poincare polynomials"},
      {2, "exponential generating function identities"},
      {3, "enveloping-algebra Hilbert series"},
      {4, "lower-central-series rank routes agree"},
      {5, "holonomy graded dimensions vs dual series"},
      {6, "mildness verdicts"},
      {7, "resonance of vP_4^+"},
      {8, "resonance of vP_3"},
      {9, "Chen ranks of free groups"},
      {10, "Chen ranks of vP_3"},
      {11, "Chen ranks of the quotient braid group"},
      {12, "holonomy Chen ranks of vP_n^+"},
      {13, "Chen-ranks-formula verdicts"},
      {14, "property suites"},
  };
}

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed,
                                                  const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& [id, name] : acceptance_criteria()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), id) == only.end())
      continue;
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      Check c;
      switch (id) {
        case 1: c = c1_poincare(); break;
        case 2: c = c2_egf(); break;
        case 3: c = c3_enveloping(); break;
        case 4: c = c4_lcs_routes(); break;
        case 5: c = c5_holonomy_dims(seed); break;
        case 6: c = c6_mildness(seed); break;
        case 7: c = c7_resonance_vp4plus(seed); break;
        case 8: c = c8_resonance_vp3(seed); break;
        case 9: c = c9_chen_free(seed); break;
        case 10: c = c10_chen_vp3(seed); break;
        case 11: c = c11_chen_pbar4(seed); break;
        case 12: c = c12_holonomy_chen(seed); break;
        case 13: c = c13_chen_formula(seed); break;
        case 14: c = c14_properties(seed); break;
      }
      r.pass = c.pass;
      r.detail = c.os.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace grlie
