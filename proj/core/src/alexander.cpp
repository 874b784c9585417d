#include "grlie/alexander.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "grlie/combinatorics.hpp"
#include "grlie/sparse_matrix.hpp"

namespace grlie {

namespace {

// sorted p-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> s(p);
  for (int i = 0; i < p; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = p - 1;
    while (i >= 0 && s[i] == n - p + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

int pair_rank(int i, int j, int n) {  // rank of {i,j}, i < j, lex order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// delta_2 applied to a vector over the pair basis
std::vector<MultiPoly> apply_delta2(const std::vector<MultiPoly>& w, int n) {
  std::vector<MultiPoly> out(n, MultiPoly(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiPoly& c = w[pair_rank(i, j, n)];
      if (c.is_zero()) continue;
      out[j] = out[j] + c * MultiPoly::variable(n, i);
      out[i] = out[i] - c * MultiPoly::variable(n, j);
    }
  return out;
}

}  // namespace

std::vector<std::vector<MultiPoly>> koszul_differential(int n, int p) {
  if (p < 1 || p > n) throw DomainError("koszul_differential: p out of range");
  auto cols_sets = subsets(n, p);
  auto rows_sets = subsets(n, p - 1);
  std::map<std::vector<int>, int> row_idx;
  for (size_t r = 0; r < rows_sets.size(); ++r) row_idx[rows_sets[r]] = (int)r;
  std::vector<std::vector<MultiPoly>> cols;
  for (const auto& S : cols_sets) {
    std::vector<MultiPoly> col(rows_sets.size(), MultiPoly(n));
    for (int pos = 0; pos < p; ++pos) {
      std::vector<int> T = S;
      T.erase(T.begin() + pos);
      MultiPoly x = MultiPoly::variable(n, S[pos]);
      col[row_idx[T]] = col[row_idx[T]] + (pos % 2 ? -x : x);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<MultiPoly> koszul_lift(const std::vector<MultiPoly>& v) {
  int n = (int)v.size();
  MultiPoly cycle(n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [e, c] : v[j].terms()) {
      bool constant = true;
      for (int i = 0; i < n; ++i)
        if (e[i]) { constant = false; break; }
      if (constant) throw DomainError("koszul_lift: constant term present");
    }
    cycle = cycle + v[j] * MultiPoly::variable(n, j);
  }
  if (!cycle.is_zero()) throw DomainError("koszul_lift: not a cycle");

  std::vector<MultiPoly> w(n * (n - 1) / 2, MultiPoly(n));
  for (int j = 0; j < n; ++j)
    for (const auto& [e, c] : v[j].terms()) {
      int i = 0;
      while (e[i] == 0) ++i;
      if (i >= j) continue;  // cancels against lower-index contributions
      Expo e2 = e;
      --e2[i];
      w[pair_rank(i, j, n)].add_term(e2, c);
    }
  if (apply_delta2(w, n) != v)
    throw DomainError("koszul_lift: homotopy contract violated");
  return w;
}

ModulePresentation alexander_presentation(const GroupPresentation& g) {
  if (!is_commutator_relators(g))
    throw DomainError("alexander_presentation: relators must be commutators");
  int n = g.ngens();
  ModulePresentation M;
  M.n = n;
  M.q = n * (n - 1) / 2;
  M.provenance = ModulePresentation::alexander;
  M.label = g.label;
  if (n >= 3) M.columns = koszul_differential(n, 3);

  auto fox = fox_matrix(g);
  for (auto& row : fox) {
    // clear Laurent denominators by the joint componentwise-minimum unit
    Expo mn(n, 0);
    bool any = false;
    for (const auto& entry : row) {
      if (entry.is_zero()) continue;
      Expo me = entry.min_exponents();
      if (!any) {
        mn = me;
        any = true;
      } else {
        for (int i = 0; i < n; ++i) mn[i] = std::min(mn[i], me[i]);
      }
    }
    if (!any) continue;  // relator with zero Fox row presents no relation
    Expo neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -mn[i];
    std::vector<MultiPoly> poly_row;
    for (const auto& entry : row)
      poly_row.push_back(entry.shift(neg).substitute_one_plus_x());
    // koszul_lift enforces the fundamental check sum a_j x_j = 0
    std::vector<MultiPoly> nu = koszul_lift(poly_row);
    bool zero = true;
    for (const auto& p : nu)
      if (!p.is_zero()) { zero = false; break; }
    if (!zero) M.columns.push_back(std::move(nu));
  }
  return M;
}

namespace {

// monomials of total degree exactly d, one degree at a time
void gen_monomials(int n, int d, std::vector<Expo>& out) {
  Expo e(n, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      e[pos] = rem;
      out.push_back(e);
      e[pos] = 0;
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return;
  }
  rec(rec, 0, d);
}

std::vector<int> certified_pivots(const SparseMatrixQ& m, std::uint64_t seed) {
  auto primes = fp::random_primes(seed, 5);
  std::vector<std::vector<int>> results;
  for (auto p : primes) {
    try {
      auto rows = reduce_mod_p(m, p);
      results.push_back(fp_pivot_columns(std::move(rows), m.ncols, p));
    } catch (const DomainError&) {
      continue;  // denominator vanished mod p; try the next prime
    }
    for (size_t a = 0; a + 1 < results.size(); ++a)
      if (results[a] == results.back()) return results.back();
  }
  throw ResourceError(results.size() >= 2
                          ? "gr_hilbert: modular pivot computations disagree"
                          : "gr_hilbert: no usable primes");
}

}  // namespace

std::vector<long long> gr_hilbert(const ModulePresentation& M, int D,
                                  std::uint64_t seed) {
  if (D < 0) throw DomainError("gr_hilbert: negative truncation degree");
  int n = M.n, q = M.q;
  if (binomial(D + n, n) * q > 500000)
    throw ResourceError("gr_hilbert: truncated ambient dimension over budget");

  std::vector<Expo> mons;
  std::vector<int> mcount(D + 1);
  for (int d = 0; d <= D; ++d) {
    size_t before = mons.size();
    gen_monomials(n, d, mons);
    mcount[d] = (int)(mons.size() - before);
  }
  std::map<Expo, int> midx;
  for (size_t i = 0; i < mons.size(); ++i) midx[mons[i]] = (int)i;
  std::vector<int> mondeg(mons.size());
  for (size_t i = 0; i < mons.size(); ++i) {
    int d = 0;
    for (int x : mons[i]) d += x;
    mondeg[i] = d;
  }

  // ambient column (alpha, r) -> midx[alpha]*q + r; monomials are listed
  // degree-ascending, so columns are too
  SparseMatrixQ mat(0, (int)mons.size() * q);
  for (const auto& col : M.columns)
    for (const auto& alpha : mons) {
      std::map<int, Scalar> acc;
      for (int r = 0; r < q; ++r)
        for (const auto& [e, c] : col[r].terms()) {
          Expo beta(n);
          int deg = 0;
          for (int i = 0; i < n; ++i) {
            beta[i] = alpha[i] + e[i];
            deg += beta[i];
          }
          if (deg > D) continue;
          acc[midx[beta] * q + r] += c;
        }
      SparseRowQ row;
      for (auto& [j, v] : acc)
        if (!is_zero(v)) row.emplace_back(j, v);
      if (!row.empty()) mat.rows.push_back(std::move(row));
    }
  mat.nrows = (int)mat.rows.size();

  std::vector<int> pivots = certified_pivots(mat, seed);
  std::vector<long long> dims(D + 1);
  for (int d = 0; d <= D; ++d) dims[d] = (long long)mcount[d] * q;
  for (int j : pivots) --dims[mondeg[j / q]];
  return dims;
}

ModulePresentation linearized_presentation(const ModulePresentation& M) {
  if (M.provenance != ModulePresentation::alexander)
    throw DomainError("linearized_presentation: input must be an Alexander presentation");
  ModulePresentation L;
  L.n = M.n;
  L.q = M.q;
  L.provenance = ModulePresentation::linearized;
  L.label = M.label;
  for (const auto& col : M.columns) {
    int d = -1;
    for (const auto& p : col)
      if (!p.is_zero() && (d < 0 || p.min_degree() < d)) d = p.min_degree();
    if (d < 0) continue;
    std::vector<MultiPoly> out;
    for (const auto& p : col) out.push_back(p.homogeneous_component(d));
    L.columns.push_back(std::move(out));
  }
  return L;
}

std::vector<long long> graded_hilbert(const ModulePresentation& M, int D,
                                      std::uint64_t seed) {
  if (D < 0) throw DomainError("graded_hilbert: negative degree");
  int n = M.n, q = M.q;
  std::vector<int> coldeg;
  for (const auto& col : M.columns) {
    int d = -1;
    for (const auto& p : col) {
      if (p.is_zero()) continue;
      int dd;
      if (!p.is_homogeneous(&dd))
        throw DomainError("graded_hilbert: column entry not homogeneous");
      if (d < 0)
        d = dd;
      else if (dd != d)
        throw DomainError("graded_hilbert: column mixes degrees");
    }
    coldeg.push_back(d);  // -1 for a zero column
  }

  std::vector<long long> dims(D + 1);
  auto degree_dim = [&](int k) {
    std::vector<Expo> mons;
    gen_monomials(n, k, mons);
    if ((long long)mons.size() * q > 500000)
      throw ResourceError("graded_hilbert: degree slice over budget");
    std::map<Expo, int> midx;
    for (size_t i = 0; i < mons.size(); ++i) midx[mons[i]] = (int)i;

    SparseMatrixQ mat(0, (int)mons.size() * q);
    for (size_t ci = 0; ci < M.columns.size(); ++ci) {
      int d = coldeg[ci];
      if (d < 0 || d > k) continue;
      std::vector<Expo> shifts;
      gen_monomials(n, k - d, shifts);
      for (const auto& alpha : shifts) {
        std::map<int, Scalar> acc;
        for (int r = 0; r < q; ++r)
          for (const auto& [e, c] : M.columns[ci][r].terms()) {
            Expo beta(n);
            for (int i = 0; i < n; ++i) beta[i] = alpha[i] + e[i];
            acc[midx[beta] * q + r] += c;
          }
        SparseRowQ row;
        for (auto& [j, v] : acc)
          if (!is_zero(v)) row.emplace_back(j, v);
        if (!row.empty()) mat.rows.push_back(std::move(row));
      }
    }
    mat.nrows = (int)mat.rows.size();
    dims[k] = (long long)mons.size() * q - certified_rank(mat, seed + k);
  };

  int nthreads = 1;
  if (const char* env = std::getenv("GRLIE_THREADS"))
    nthreads = std::max(1, std::atoi(env));
  else
    nthreads = std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, D + 1);
  if (nthreads == 1) {
    for (int k = 0; k <= D; ++k) degree_dim(k);
  } else {
    std::atomic<int> next(0);
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
      int k;
      while ((k = next.fetch_add(1)) <= D) {
        try {
          degree_dim(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  }
  return dims;
}

long long ThetaSeries::at(int k) const {
  if (k < 2 || k - 2 >= (int)theta.size())
    throw DomainError("ThetaSeries: index out of range");
  return theta[k - 2];
}

Int theta_closed(ThetaFamily kind, int n, int k) {
  if (k < 1) throw DomainError("theta_closed: k must be positive");
  if (kind == ThetaFamily::free_grp) {
    if (k == 1) return Int((long)n);
    return (k - 1) * binomial(n + k - 2, k);
  }
  if (k == 1) return binomial(n, 2);
  if (k == 2) return binomial(n, 3);
  return (k - 1) * binomial(n + 1, 4);
}

ChenFormulaVerdict chen_formula_test(const ThetaSeries& theta,
                                     const std::map<int, long long>& components,
                                     int k_min, int D) {
  if (k_min < 3 || D < k_min)
    throw DomainError("chen_formula_test: need D >= k_min >= 3");
  ChenFormulaVerdict v;
  std::ostringstream os;
  for (int k = k_min; k <= D; ++k) {
    Int lhs((long)theta.at(k));
    Int rhs(0);
    for (const auto& [m, h] : components)
      rhs += Int((long)h) * theta_closed(ThetaFamily::free_grp, m, k);
    if (lhs != rhs) {
      v.holds = false;
      v.first_failure = k;
      v.lhs = lhs;
      v.rhs = rhs;
      os << "fails at k=" << k << ": theta_k=" << lhs.get_str()
         << ", formula gives " << rhs.get_str();
      v.report = os.str();
      return v;
    }
  }
  os << "holds for k=" << k_min << ".." << D;
  v.report = os.str();
  return v;
}

}  // namespace grlie
