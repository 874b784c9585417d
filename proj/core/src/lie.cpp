#include "grlie/lie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grlie/combinatorics.hpp"
#include "grlie/unipoly.hpp"

namespace grlie {

HallBasis::HallBasis(int n, int K, long long budget) : n_(n), K_(K) {
  if (n < 1 || K < 1) throw DomainError("HallBasis: n, K >= 1");
  by_degree_.assign(K + 1, {});
  for (int i = 0; i < n; ++i) {
    Elem e;
    e.deg = 1;
    e.gen = i;
    by_degree_[1].push_back((int)elems_.size());
    elems_.push_back(e);
  }
  for (int k = 2; k <= K; ++k) {
    if (witt(n, k) > Int((long)budget))
      throw ResourceError("HallBasis: degree " + std::to_string(k) +
                          " exceeds the element budget");
    std::vector<std::pair<int, int>> cand;
    for (int d2 = 1; d2 < k; ++d2) {
      int d1 = k - d2;
      for (int u : by_degree_[d2])
        for (int v : by_degree_[d1]) {
          if (u <= v) continue;
          const Elem& eu = elems_[u];
          if (eu.deg > 1 && eu.right > v) continue;
          cand.emplace_back(u, v);
        }
    }
    std::sort(cand.begin(), cand.end());
    for (auto [u, v] : cand) {
      Elem e;
      e.deg = k;
      e.left = u;
      e.right = v;
      pair_id_[{u, v}] = (int)elems_.size();
      by_degree_[k].push_back((int)elems_.size());
      elems_.push_back(e);
    }
    if (witt(n, k) != Int((long)count(k)))
      throw DomainError("HallBasis: count mismatch with the Witt formula");
  }
}

namespace {

void add_scaled(HallBasis::Vec& dst, const HallBasis::Vec& src, long long c) {
  if (c == 0) return;
  for (const auto& [id, v] : src) {
    long long prod, sum;
    if (__builtin_mul_overflow(v, c, &prod))
      throw ResourceError("bracket expansion: coefficient overflow");
    long long& slot = dst[id];
    if (__builtin_add_overflow(slot, prod, &sum))
      throw ResourceError("bracket expansion: coefficient overflow");
    slot = sum;
    if (slot == 0) dst.erase(id);
  }
}

}  // namespace

HallBasis::Vec HallBasis::bracket(int u, int v) {
  if (u == v) return {};
  if (u < v) {
    Vec r = bracket_ordered(v, u);
    for (auto& [id, c] : r) c = -c;
    return r;
  }
  return bracket_ordered(u, v);
}

HallBasis::Vec HallBasis::bracket_ordered(int u, int v) {
  if (elems_[u].deg + elems_[v].deg > K_)
    throw DomainError("bracket: degree exceeds basis bound");
  auto mit = memo_.find({u, v});
  if (mit != memo_.end()) return mit->second;
  Vec res;
  const Elem& eu = elems_[u];
  if (eu.deg == 1 || eu.right <= v) {
    res[pair_id_.at({u, v})] = 1;
  } else {
    // Jacobi: [[a,b],v] = [a,[b,v]] + [[a,v],b]
    int a = eu.left, b = eu.right;
    for (const auto& [h, c] : bracket_ordered(b, v))
      add_scaled(res, bracket(a, h), c);
    for (const auto& [h, c] : bracket(a, v))
      add_scaled(res, bracket(h, b), c);
  }
  memo_.emplace(std::make_pair(u, v), res);
  return res;
}

namespace {

// Dense Gaussian eliminator over F_p with p < 2^20 so that a full row
// reduction fits in 64-bit accumulators without intermediate remainders.
class DenseFpEliminator {
 public:
  DenseFpEliminator(int ncols, std::uint32_t p)
      : nc_(ncols), p_(p), col_row_(ncols, -1) {}

  // buf holds entries reduced mod p; consumed.  Returns true if the rank grew.
  bool add_buffer(std::vector<std::uint64_t>& buf) {
    for (int c = 0; c < nc_; ++c) {
      std::uint32_t f = (std::uint32_t)(buf[c] % p_);
      if (!f) continue;
      int r = col_row_[c];
      if (r < 0) {
        std::vector<std::uint32_t> row(nc_, 0);
        std::uint64_t inv = fp::inv(f, p_);
        for (int j = c; j < nc_; ++j)
          row[j] = (std::uint32_t)(buf[j] % p_ * inv % p_);
        col_row_[c] = (int)rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      std::uint64_t m = p_ - f;
      const auto& pr = rows_[r];
      for (int j = c; j < nc_; ++j) buf[j] += m * pr[j];
    }
    return false;
  }

  long rank() const { return (long)rows_.size(); }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

 private:
  int nc_;
  std::uint32_t p_;
  std::vector<int> col_row_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Deterministic 20-bit primes derived from the seed (so that the dense
// eliminator's delayed-reduction bound holds).
std::vector<std::uint32_t> layer_primes(std::uint64_t seed, int count) {
  std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL;
  std::vector<std::uint32_t> out;
  while ((int)out.size() < count) {
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    std::uint32_t cand = (std::uint32_t)(x % (1u << 19)) | (1u << 19) | 1u;
    if (!fp::is_prime(cand)) continue;
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  return out;
}

// Integer relator vectors over the degree-2 Hall ids.  Input rows are over
// pair coordinates (i,j), i<j, meaning [x_i, x_j]; the Hall element is
// [x_j, x_i], so the sign flips.
std::vector<std::vector<long long>> scale_relators(
    const LiePresentation& L, HallBasis& hb) {
  int n = L.n, P = n * (n - 1) / 2;
  int first2 = hb.degree_ids(2).empty() ? 0 : hb.degree_ids(2)[0];
  std::vector<std::vector<long long>> out;
  for (const auto& rel : L.relators) {
    if ((int)rel.size() != P)
      throw DomainError("LiePresentation: relator has wrong length");
    Int den(1);
    for (const auto& c : rel)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<long long> v(hb.count(2), 0);
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++c) {
        if (is_zero(rel[c])) continue;
        Scalar s = rel[c] * Scalar(den);
        // hall id of [x_j, x_i]
        HallBasis::Vec b = hb.bracket(j, i);
        for (const auto& [id, coef] : b)
          v[id - first2] += coef * s.get_num().get_si();
      }
    out.push_back(std::move(v));
  }
  return out;
}

// Ideal layers in degrees 2..K over F_p: layer k is spanned by brackets of
// generators with a basis of layer k-1.
std::vector<DenseFpEliminator> ideal_layers(
    HallBasis& hb, const std::vector<std::vector<long long>>& rel2, int K,
    std::uint32_t p) {
  std::vector<DenseFpEliminator> E;
  E.reserve(K - 1);
  for (int k = 2; k <= K; ++k)
    E.emplace_back((int)hb.count(k), p);
  // degree 2
  for (const auto& r : rel2) {
    std::vector<std::uint64_t> buf(r.size());
    for (size_t j = 0; j < r.size(); ++j) buf[j] = fp::reduce_ll(r[j], p);
    E[0].add_buffer(buf);
  }
  for (int k = 3; k <= K; ++k) {
    int C = (int)hb.count(k);
    int first_prev = hb.degree_ids(k - 1)[0];
    int first_cur = hb.degree_ids(k)[0];
    for (const auto& row : E[k - 3].rows()) {
      for (int g = 0; g < hb.n(); ++g) {
        std::vector<std::uint64_t> buf(C, 0);
        bool any = false;
        for (size_t j = 0; j < row.size(); ++j) {
          if (!row[j]) continue;
          for (const auto& [id, coef] :
               hb.bracket(g, first_prev + (int)j)) {
            buf[id - first_cur] +=
                (std::uint64_t)row[j] * fp::reduce_ll(coef, p);
            any = true;
          }
        }
        if (!any) continue;
        for (auto& x : buf) x %= p;
        E[k - 2].add_buffer(buf);
      }
    }
  }
  return E;
}

std::vector<long long> phi_mod_p(HallBasis& hb,
                                 const std::vector<std::vector<long long>>& rel2,
                                 int K, std::uint32_t p) {
  std::vector<long long> phi;
  phi.push_back(hb.n());
  if (K < 2) return phi;
  auto E = ideal_layers(hb, rel2, K, p);
  for (int k = 2; k <= K; ++k)
    phi.push_back(hb.count(k) - E[k - 2].rank());
  return phi;
}

std::vector<long long> theta_mod_p(HallBasis& hb,
                                   const std::vector<std::vector<long long>>& rel2,
                                   int K, std::uint32_t p) {
  std::vector<long long> theta;
  theta.push_back(hb.n());
  if (K < 2) return theta;
  auto E = ideal_layers(hb, rel2, K, p);
  for (int k = 2; k <= K; ++k) {
    // add [u, v] for Hall elements u, v of degrees >= 2 summing to k
    DenseFpEliminator el = E[k - 2];
    int first_cur = hb.degree_ids(k)[0];
    int C = (int)hb.count(k);
    for (int dq = 2; dq <= k - 2; ++dq) {
      int dp = k - dq;
      if (dp < dq) break;
      for (int u : hb.degree_ids(dp))
        for (int v : hb.degree_ids(dq)) {
          if (u <= v) continue;
          std::vector<std::uint64_t> buf(C, 0);
          bool any = false;
          for (const auto& [id, coef] : hb.bracket(u, v)) {
            buf[id - first_cur] += fp::reduce_ll(coef, p);
            any = true;
          }
          if (any) el.add_buffer(buf);
        }
    }
    theta.push_back(hb.count(k) - el.rank());
  }
  return theta;
}

GradedDims certified(const std::function<std::vector<long long>(std::uint32_t)>& f,
                     std::uint64_t seed) {
  auto primes = layer_primes(seed, 3);
  std::vector<long long> a = f(primes[0]);
  std::vector<long long> b = f(primes[1]);
  if (a == b) return GradedDims{a};
  std::vector<long long> c = f(primes[2]);
  if (c == a) return GradedDims{a};
  if (c == b) return GradedDims{b};
  throw ResourceError("graded rank: modular computations disagree");
}

}  // namespace

LiePresentation holonomy_presentation(const TwoStepAlgebra& a) {
  LiePresentation L;
  L.n = a.b1;
  L.label = a.label;
  for (int r = 0; r < a.b2; ++r) L.relators.push_back(a.cup[r]);
  return L;
}

GradedDims graded_dims(const LiePresentation& L, int K, std::uint64_t seed) {
  if (K < 2) return GradedDims{{L.n}};
  HallBasis hb(L.n, std::max(K, 2));
  auto rel2 = scale_relators(L, hb);
  return certified(
      [&](std::uint32_t p) { return phi_mod_p(hb, rel2, K, p); }, seed);
}

GradedDims chen_dims(const LiePresentation& L, int K, std::uint64_t seed) {
  if (K < 2) return GradedDims{{L.n}};
  HallBasis hb(L.n, std::max(K, 2));
  auto rel2 = scale_relators(L, hb);
  return certified(
      [&](std::uint32_t p) { return theta_mod_p(hb, rel2, K, p); }, seed);
}

LiePresentation quadratic_initial_forms(const GroupPresentation& g) {
  if (!is_commutator_relators(g))
    throw DomainError("initial forms: relator with nonzero exponent sum");
  int n = g.ngens();
  LiePresentation L;
  L.n = n;
  L.label = g.label;
  for (const auto& w : g.relators) {
    // Magnus expansion through degree 2: x -> 1+z, x^-1 -> 1-z+z^2
    std::vector<long long> lin(n, 0);
    std::vector<std::vector<long long>> quad(n, std::vector<long long>(n, 0));
    for (const auto& l : w.letters()) {
      int i = l.gen;
      if (l.exp == 1) {
        for (int a = 0; a < n; ++a) quad[a][i] += lin[a];
        lin[i] += 1;
      } else {
        for (int a = 0; a < n; ++a) quad[a][i] -= lin[a];
        quad[i][i] += 1;
        lin[i] -= 1;
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((a == b && quad[a][b] != 0) || quad[a][b] != -quad[b][a])
          throw DomainError("initial forms: degree-2 part is not a Lie element");
    std::vector<Scalar> rel(n * (n - 1) / 2, Scalar(0));
    int c = 0;
    bool nonzero = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++c) {
        rel[c] = Scalar((long)quad[a][b]);
        nonzero = nonzero || quad[a][b] != 0;
      }
    if (!nonzero)
      throw DomainError("initial forms: relator has weight greater than 2");
    L.relators.push_back(std::move(rel));
  }
  return L;
}

MildnessResult mildness_check(const GroupPresentation& g, int K,
                              std::uint64_t seed) {
  LiePresentation L = quadratic_initial_forms(g);
  GradedDims phi = graded_dims(L, K, seed);
  int n = L.n, m = (int)L.relators.size();
  // expected: 1 / (1 - n t + m t^2)
  UniRationalFunction target(
      UniPoly::constant(Scalar(1)),
      UniPoly(std::vector<Scalar>{Scalar(1), Scalar(-n), Scalar(m)}));
  std::vector<Scalar> want = series_expand(target, K);
  // actual: prod (1 - t^k)^{-phi_k}
  std::vector<Scalar> have(K + 1, Scalar(0));
  have[0] = 1;
  for (int k = 1; k <= K; ++k) {
    if (phi.dims[k - 1] == 0) continue;
    std::vector<Scalar> base(K + 1, Scalar(0));
    base[0] = 1;
    base[k] = -1;
    std::vector<Scalar> inv = series_inverse(base, K);
    for (long long e = 0; e < phi.dims[k - 1]; ++e) have = series_mul(have, inv, K);
  }
  MildnessResult res;
  res.phi = phi.dims;
  std::ostringstream rep;
  for (int d = 0; d <= K; ++d) {
    if (have[d] != want[d]) {
      res.mild = false;
      res.first_failure = d;
      rep << "degree " << d << ": enveloping dimension " << have[d].get_str()
          << ", mild target " << want[d].get_str();
      break;
    }
  }
  if (res.mild) rep << "mild up to degree " << K;
  res.report = rep.str();
  return res;
}

}  // namespace grlie
