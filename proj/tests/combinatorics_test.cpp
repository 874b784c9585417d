#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "grlie/combinatorics.hpp"
#include "grlie/unipoly.hpp"

using namespace grlie;

namespace {

// brute-force oracles by exhaustive enumeration
long long count_permutations_with_cycles(int n, int k) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

long long count_set_partitions(int n, int k) {
  // restricted growth strings
  std::vector<int> a(n, 0);
  long long count = 0;
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      if (mx + 1 == k) ++count;
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);  // position 0 is always block 0
  return n == 0 ? (k == 0) : count;
}

}  // namespace

TEST_CASE("cycle counts match exhaustive permutation enumeration") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(special_number(SpecialKind::stirling1, n, k) ==
            (n == 0 ? Int(k == 0) : Int((long)count_permutations_with_cycles(n, k))));
}

TEST_CASE("set-partition counts match exhaustive enumeration") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(special_number(SpecialKind::stirling2, n, k) ==
            Int((long)count_set_partitions(n, k)));
}

TEST_CASE("ordered-partition counts match the closed form") {
  // L(n,k) = C(n-1,k-1) n!/k!
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(special_number(SpecialKind::lah, n, k) ==
            binomial(n - 1, k - 1) * factorial(n) / factorial(k));
}

TEST_CASE("special_number rejects bad arguments") {
  CHECK_THROWS_AS(special_number(SpecialKind::lah, 2, 3), DomainError);
  CHECK_THROWS_AS(special_number(SpecialKind::stirling1, -1, 0), DomainError);
}

TEST_CASE("binomial and factorial basics") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(factorial(6) == 720);
  Int sum(0);
  for (int k = 0; k <= 12; ++k) sum += binomial(12, k);
  CHECK(sum == Int(1) << 12);
}

TEST_CASE("mobius is multiplicative and detects squares") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  // sum over divisors of mu(d) = [n == 1]
  for (long long n = 1; n <= 60; ++n) {
    int s = 0;
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("necklace-count identity for the free-Lie dimensions") {
  // sum over d | k of d * witt(n, d) = n^k
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 12; ++k) {
      Int acc(0);
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) acc += d * witt(n, d);
      Int pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), n, k);
      CHECK(acc == pw);
    }
}

TEST_CASE("three rank-extraction routes agree") {
  std::vector<std::vector<long long>> cases = {
      {3, 1}, {6, 6}, {6, 11, 6}, {6, 7, 1}, {2}, {5, 2, 3, 1}};
  for (const auto& b : cases) {
    auto m = lcs_ranks_mobius(b, 9);
    auto p = lcs_ranks_pbw(b, 9);
    auto w = lcs_ranks_powersum(b, 9);
    CHECK(m.phi == p.phi);
    CHECK(m.phi == w.phi);
  }
}

TEST_CASE("ranks of an iterated extension split as sums of free-group ranks") {
  // Betti vector of prod (1 + s t), s = 1..m: ranks are sums of witt numbers
  for (int m = 1; m <= 4; ++m) {
    UniPoly poly(std::vector<Scalar>{Scalar(1)});
    for (int s = 1; s <= m; ++s)
      poly = poly * UniPoly(std::vector<Scalar>{Scalar(1), Scalar((long)s)});
    std::vector<long long> b;
    for (int i = 1; i <= poly.degree(); ++i)
      b.push_back(poly.coeff(i).get_num().get_si());
    auto phi = lcs_ranks_mobius(b, 8).phi;
    for (int k = 1; k <= 8; ++k) {
      Int want(0);
      for (int s = 1; s <= m; ++s) want += witt(s, k);
      CHECK(Int((long)phi[k - 1]) == want);
    }
  }
}

TEST_CASE("known rank table for a two-step Betti vector") {
  auto t = lcs_ranks_powersum({3, 1}, 5);
  CHECK(t.phi == std::vector<long long>{3, 2, 5, 10, 24});
}

TEST_CASE("series extraction rejects non-positive rank data") {
  CHECK_THROWS_WITH_AS(lcs_ranks_pbw({1, 3}, 4), "series is not a PBW series",
                       DomainError);
}
