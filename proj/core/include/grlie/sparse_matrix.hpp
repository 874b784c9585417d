#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grlie/multipoly.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRowQ = std::vector<std::pair<int, Scalar>>;
using SparseRowFp = std::vector<std::pair<int, std::uint32_t>>;

struct SparseMatrixQ {
  int nrows = 0, ncols = 0;
  std::vector<SparseRowQ> rows;

  SparseMatrixQ() = default;
  SparseMatrixQ(int r, int c) : nrows(r), ncols(c), rows(r) {}
  void set(int i, int j, const Scalar& v);  // append; keep calls ordered by j
  SparseMatrixQ transpose() const;
  size_t nonzero_count() const;
};

// Reduce mod p.  Throws DomainError if any denominator vanishes mod p.
std::vector<SparseRowFp> reduce_mod_p(const SparseMatrixQ& m, std::uint32_t p);

// Structured Gaussian elimination over F_p.  Pivot of a row is its smallest
// remaining column.  Returns the sorted list of pivot columns; the rank is
// its size.
std::vector<int> fp_pivot_columns(std::vector<SparseRowFp> rows, int ncols,
                                  std::uint32_t p);
long fp_rank(std::vector<SparseRowFp> rows, int ncols, std::uint32_t p);

// Dense elimination over F_p (rows are full-width); for matrices too dense
// to benefit from sparse bookkeeping.
long fp_rank_dense(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

// Exact rank over the rationals (sparse fraction-managed elimination).
long rational_rank(const SparseMatrixQ& m);

// Rank with modular certification: compute mod two primes derived from
// `seed`; if they agree, return that value, otherwise fall back to exact
// rational elimination.  (A modular rank can only undershoot, so agreement
// of two independent primes is overwhelming — and the fallback keeps the
// result unconditionally exact.)
long certified_rank(const SparseMatrixQ& m, std::uint64_t seed);

// Determinant of a dense rational matrix (Bareiss, fraction-free on the
// scaled integer matrix).
Scalar dense_determinant(const std::vector<std::vector<Scalar>>& a);

// Determinant of a dense matrix of polynomials.  Bareiss with exact
// division; `laplace` uses cofactor expansion with memoization on column
// subsets (slower; kept as an independent cross-check).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& a);
MultiPoly poly_determinant_laplace(const std::vector<std::vector<MultiPoly>>& a);

// All k-by-k minors of a dense polynomial matrix.
std::vector<MultiPoly> poly_minors(const std::vector<std::vector<MultiPoly>>& a,
                                   int k);

}  // namespace grlie
