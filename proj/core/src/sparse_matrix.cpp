#include "grlie/sparse_matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace grlie {

void SparseMatrixQ::set(int i, int j, const Scalar& v) {
  if (is_zero(v)) return;
  rows[i].emplace_back(j, v);
}

SparseMatrixQ SparseMatrixQ::transpose() const {
  SparseMatrixQ t(ncols, nrows);
  for (int i = 0; i < nrows; ++i)
    for (const auto& [j, v] : rows[i]) t.rows[j].emplace_back(i, v);
  return t;
}

size_t SparseMatrixQ::nonzero_count() const {
  size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

std::vector<SparseRowFp> reduce_mod_p(const SparseMatrixQ& m, std::uint32_t p) {
  std::vector<SparseRowFp> out(m.nrows);
  for (int i = 0; i < m.nrows; ++i) {
    out[i].reserve(m.rows[i].size());
    for (const auto& [j, v] : m.rows[i]) {
      std::uint32_t r = fp::reduce(v, p);
      if (r) out[i].emplace_back(j, r);
    }
  }
  return out;
}

namespace {

// dst -= c * src, both sorted by column; src has leading value 1.
SparseRowFp fp_axpy(const SparseRowFp& dst, std::uint32_t c,
                    const SparseRowFp& src, std::uint32_t p) {
  SparseRowFp out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, fp::neg(fp::mul(c, src[j].second, p), p));
      ++j;
    } else {
      std::uint32_t v = fp::sub(dst[i].second, fp::mul(c, src[j].second, p), p);
      if (v) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRowQ q_axpy(const SparseRowQ& dst, const Scalar& c, const SparseRowQ& src) {
  SparseRowQ out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(c * src[j].second));
      ++j;
    } else {
      Scalar v = dst[i].second - c * src[j].second;
      if (!is_zero(v)) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<int> fp_pivot_columns(std::vector<SparseRowFp> rows, int ncols,
                                  std::uint32_t p) {
  std::vector<int> pivot_row(ncols, -1);
  std::vector<SparseRowFp> basis;
  for (auto& row : rows) {
    while (!row.empty()) {
      int c = row.front().first;
      int pr = pivot_row[c];
      if (pr < 0) {
        std::uint32_t s = fp::inv(row.front().second, p);
        for (auto& [col, v] : row) v = fp::mul(v, s, p);
        pivot_row[c] = (int)basis.size();
        basis.push_back(std::move(row));
        break;
      }
      row = fp_axpy(row, row.front().second, basis[pr], p);
    }
  }
  std::vector<int> pivots;
  for (int c = 0; c < ncols; ++c)
    if (pivot_row[c] >= 0) pivots.push_back(c);
  return pivots;
}

long fp_rank(std::vector<SparseRowFp> rows, int ncols, std::uint32_t p) {
  return (long)fp_pivot_columns(std::move(rows), ncols, p).size();
}

long fp_rank_dense(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  int nr = (int)rows.size(), nc = (int)rows[0].size();
  long rank = 0;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (rows[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    std::uint32_t s = fp::inv(rows[r][c], p);
    for (int j = c; j < nc; ++j) rows[r][j] = fp::mul(rows[r][j], s, p);
    for (int i = r + 1; i < nr; ++i) {
      std::uint32_t f = rows[i][c];
      if (!f) continue;
      // delayed-reduction update: accumulate in 64 bits per entry
      for (int j = c; j < nc; ++j) {
        std::uint64_t v = (std::uint64_t)rows[i][j] + (std::uint64_t)(p - f) * rows[r][j] % p;
        rows[i][j] = (std::uint32_t)(v >= p ? v - p : v);
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

long rational_rank(const SparseMatrixQ& m) {
  std::vector<int> pivot_row(m.ncols, -1);
  std::vector<SparseRowQ> basis;
  for (const auto& orig : m.rows) {
    SparseRowQ row = orig;
    while (!row.empty()) {
      int c = row.front().first;
      int pr = pivot_row[c];
      if (pr < 0) {
        Scalar s = 1 / row.front().second;
        for (auto& [col, v] : row) v *= s;
        pivot_row[c] = (int)basis.size();
        basis.push_back(std::move(row));
        break;
      }
      row = q_axpy(row, row.front().second, basis[pr]);
    }
  }
  return (long)basis.size();
}

long certified_rank(const SparseMatrixQ& m, std::uint64_t seed) {
  auto primes = fp::random_primes(seed, 8);
  std::vector<long> ranks;
  for (auto p : primes) {
    try {
      ranks.push_back(fp_rank(reduce_mod_p(m, p), m.ncols, p));
    } catch (const DomainError&) {
      continue;  // denominator hit this prime; try the next
    }
    if (ranks.size() == 2) break;
  }
  if (ranks.size() == 2 && ranks[0] == ranks[1]) return ranks[0];
  return rational_rank(m);
}

Scalar dense_determinant(const std::vector<std::vector<Scalar>>& a0) {
  auto a = a0;
  int n = (int)a.size();
  if (n == 0) return Scalar(1);
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(a[i][c])) { piv = i; break; }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv_p = 1 / a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      Scalar f = a[i][c] * inv_p;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& a0) {
  auto a = a0;
  int n = (int)a.size();
  if (n == 0) return MultiPoly::constant(0, Scalar(1));
  int nv = a[0][0].nvars();
  MultiPoly prev = MultiPoly::constant(nv, Scalar(1));
  int sign = 1;
  // Bareiss: every division below is exact.
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) { piv = i; break; }
    if (piv < 0) return MultiPoly(nv);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_divide(prev);
      a[i][k] = MultiPoly(nv);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

MultiPoly poly_determinant_laplace(const std::vector<std::vector<MultiPoly>>& a) {
  int n = (int)a.size();
  if (n == 0) return MultiPoly::constant(0, Scalar(1));
  int nv = a[0][0].nvars();
  // minor over the last popcount(mask) rows and the column set `mask`
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> MultiPoly {
    if (mask == 0) return MultiPoly::constant(nv, Scalar(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int k = __builtin_popcountll(mask);
    int row = n - k;
    MultiPoly acc(nv);
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      if (!a[row][c].is_zero()) {
        MultiPoly term = a[row][c] * self(self, mask & ~(1ull << c));
        acc = (pos % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n >= 64 ? ~0ull : (1ull << n) - 1));
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  int k = (int)idx.size();
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<MultiPoly> poly_minors(const std::vector<std::vector<MultiPoly>>& a,
                                   int k) {
  std::vector<MultiPoly> out;
  int nr = (int)a.size();
  if (k == 0 || nr == 0) return out;
  int nc = (int)a[0].size();
  if (k > nr || k > nc) return out;
  std::vector<int> ri(k), ci(k);
  for (int i = 0; i < k; ++i) ri[i] = i;
  do {
    for (int i = 0; i < k; ++i) ci[i] = i;
    do {
      std::vector<std::vector<MultiPoly>> sub(k, std::vector<MultiPoly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
      out.push_back(poly_determinant(sub));
    } while (next_combination(ci, nc));
  } while (next_combination(ri, nr));
  return out;
}

}  // namespace grlie
