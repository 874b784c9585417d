#include "grlie/combinatorics.hpp"

#include "grlie/unipoly.hpp"

namespace grlie {

Int special_number(SpecialKind kind, int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("special_number: need 0 <= k <= n");
  // row-by-row recurrence; row[j] = value at (i, j)
  std::vector<Int> row(n + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) {
      switch (kind) {
        case SpecialKind::stirling1:
          row[j] = row[j - 1] + (i - 1) * row[j];
          break;
        case SpecialKind::stirling2:
          row[j] = row[j - 1] + j * row[j];
          break;
        case SpecialKind::lah:
          row[j] = row[j - 1] + (i - 1 + j) * row[j];
          break;
      }
    }
    row[0] = 0;
  }
  return row[k];
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(int n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

int mobius(long long n) {
  if (n < 1) throw DomainError("mobius: n must be positive");
  int primes = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 ? -1 : 1;
}

Int witt(long long n, int k) {
  if (n < 1 || k < 1) throw DomainError("witt: need n,k >= 1");
  Int acc(0), pw;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)n, d);
    acc += mobius(k / d) * pw;
  }
  Int q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), k);
  if (r != 0) throw DomainError("witt: sum not divisible by k");
  return q;
}

namespace {

// P(d) = d * sum over (m_1,...,m_n), sum j*m_j = d, of
//        (-1)^{sum m_{even j}} (sum m_j - 1)! prod b_j^{m_j}/m_j!
// which equals the d-th power sum of the inverse roots of f(-t).
Int multinomial_power_sum(const std::vector<long long>& b, int d) {
  int n = (int)b.size();
  Scalar total(0);
  std::vector<int> m(n + 1, 0);
  // iterate over all m with sum j*m_j = d
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j > n) {
      if (rem != 0) return;
      long long w = 0;
      int sign = 1;
      Scalar term(1);
      for (int i = 1; i <= n; ++i) {
        w += m[i];
        if (i % 2 == 0 && m[i] % 2 == 1) sign = -sign;
        Scalar bj((long)b[i - 1]);
        for (int q = 0; q < m[i]; ++q) term *= bj;
        term /= Scalar(factorial(m[i]));
      }
      if (w == 0) return;
      term *= Scalar(factorial((int)w - 1));
      total += sign * term;
      return;
    }
    for (int mi = 0; mi * j <= rem; ++mi) {
      m[j] = mi;
      self(self, j + 1, rem - mi * j);
    }
    m[j] = 0;
  };
  rec(rec, 1, d);
  total *= d;
  if (total.get_den() != 1)
    throw DomainError("lcs_ranks: non-integral power sum");
  return Int(total.get_num());
}

long long phi_from_power_sums(const std::vector<Int>& p, int k) {
  Int acc(0);
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    acc += mobius(k / d) * p[d];
  }
  Int q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), k);
  if (r != 0) throw DomainError("lcs_ranks: Moebius sum not divisible by k");
  return q.get_si();
}

}  // namespace

RankTable lcs_ranks_mobius(const std::vector<long long>& b, int K) {
  std::vector<Int> p(K + 1, Int(0));
  for (int d = 1; d <= K; ++d) p[d] = multinomial_power_sum(b, d);
  RankTable t;
  for (int k = 1; k <= K; ++k) t.phi.push_back(phi_from_power_sums(p, k));
  return t;
}

RankTable lcs_ranks_pbw(const std::vector<long long>& b, int K) {
  // H(t) = 1/f(-t) truncated to degree K
  std::vector<Scalar> fneg(b.size() + 1, Scalar(0));
  fneg[0] = 1;
  for (size_t i = 0; i < b.size(); ++i)
    fneg[i + 1] = Scalar((long)((i + 1) % 2 ? -b[i] : b[i]));
  std::vector<Scalar> H = series_inverse(fneg, K);
  RankTable t;
  for (int k = 1; k <= K; ++k) {
    Scalar phi = H[k];
    if (phi.get_den() != 1 || sgn(phi) < 0)
      throw DomainError("series is not a PBW series");
    long long pk = phi.get_num().get_si();
    t.phi.push_back(pk);
    if (pk == 0) continue;
    // H *= (1 - t^k)^{phi_k}, truncated
    std::vector<Scalar> factor(K + 1, Scalar(0));
    Int c;
    for (int j = 0; j * k <= K; ++j) {
      mpz_bin_ui(c.get_mpz_t(), Int((long)pk).get_mpz_t(), j);
      factor[j * k] = Scalar(j % 2 ? -c : c);
    }
    H = series_mul(H, factor, K);
  }
  return t;
}

RankTable lcs_ranks_powersum(const std::vector<long long>& b, int K) {
  // f(-t) = sum c_i t^i; its reciprocal is monic with coefficients c_i,
  // so Newton's identities give the power sums of the inverse roots.
  std::vector<long long> c(b.size() + 1, 0);
  c[0] = 1;
  for (size_t i = 0; i < b.size(); ++i)
    c[i + 1] = (i + 1) % 2 ? -b[i] : b[i];
  int n = (int)c.size() - 1;
  while (n > 0 && c[n] == 0) --n;
  std::vector<Int> p(K + 1, Int(0));
  for (int k = 1; k <= K; ++k) {
    Int acc(0);
    for (int i = 1; i < k && i <= n; ++i) acc += (long)c[i] * p[k - i];
    if (k <= n) acc += Int((long)(k * c[k]));
    p[k] = -acc;
  }
  RankTable t;
  for (int k = 1; k <= K; ++k) t.phi.push_back(phi_from_power_sums(p, k));
  return t;
}

}  // namespace grlie
