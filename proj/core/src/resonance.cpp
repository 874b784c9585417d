#include "grlie/resonance.hpp"

#include <random>
#include <sstream>

#include "grlie/sparse_matrix.hpp"

namespace grlie {

AomotoMatrix aomoto_matrix(const TwoStepAlgebra& a) {
  AomotoMatrix m;
  m.b1 = a.b1;
  m.b2 = a.b2;
  m.rows.assign(a.b2, std::vector<MultiPoly>(a.b1, MultiPoly(a.b1)));
  for (int j = 0; j < a.b1; ++j)
    for (int i = 0; i < a.b1; ++i) {
      if (i == j) continue;
      std::vector<Scalar> col = a.product(i, j);
      for (int r = 0; r < a.b2; ++r)
        if (!is_zero(col[r]))
          m.rows[r][j] = m.rows[r][j] + MultiPoly::variable(a.b1, i) * col[r];
    }
  return m;
}

namespace {

long rank_at_point(const TwoStepAlgebra& a, const std::vector<Scalar>& point) {
  AomotoMatrix m = aomoto_matrix(a);
  SparseMatrixQ mat(m.b2, m.b1);
  for (int r = 0; r < m.b2; ++r)
    for (int j = 0; j < m.b1; ++j) {
      Scalar v = m.rows[r][j].eval(point);
      if (!is_zero(v)) mat.rows[r].emplace_back(j, v);
    }
  return rational_rank(mat);
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

std::vector<Scalar> random_point(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
  std::vector<Scalar> pt(dim);
  for (int i = 0; i < dim; ++i) {
    Scalar v((long)num(rng));
    v /= Scalar((long)den(rng));
    pt[i] = v;
  }
  return pt;
}

std::vector<Scalar> nonzero_random_point(std::mt19937_64& rng, int dim) {
  while (true) {
    auto pt = random_point(rng, dim);
    if (!is_zero_vector(pt)) return pt;
  }
}

std::vector<Scalar> concat(const std::vector<Scalar>& a,
                           const std::vector<Scalar>& b) {
  std::vector<Scalar> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

long aomoto_b1(const TwoStepAlgebra& a, const std::vector<Scalar>& point) {
  if ((int)point.size() != a.b1)
    throw DomainError("aomoto_b1: point dimension mismatch");
  if (is_zero_vector(point)) return a.b1;
  return a.b1 - rank_at_point(a, point) - 1;
}

Ideal resonance_ideal(const TwoStepAlgebra& a, int d) {
  if (d < 1 || d > a.b1) throw DomainError("resonance_ideal: depth out of range");
  int size = a.b1 - d;
  Ideal I;
  I.nvars = a.b1;
  if (size < 1) return I;  // every point is resonant at this depth
  AomotoMatrix m = aomoto_matrix(a);
  for (auto& f : poly_minors(m.rows, size))
    if (!f.is_zero()) I.gens.push_back(f.primitive_part());
  return I;
}

bool subspace_in_resonance(const TwoStepAlgebra& a,
                           const LinearSubspaceParam& L, int d) {
  if (L.b1 != a.b1)
    throw DomainError("subspace_in_resonance: ambient dimension mismatch");
  int size = a.b1 - d;
  if (size < 1) return true;
  int k = (int)L.spans.size();
  // substitute x_i -> sum_s v_s[i] * s_s (linear forms in the parameters)
  std::vector<MultiPoly> values;
  for (int i = 0; i < a.b1; ++i) {
    MultiPoly f(k);
    for (int s = 0; s < k; ++s)
      if (!is_zero(L.spans[s][i]))
        f = f + MultiPoly::variable(k, s) * L.spans[s][i];
    values.push_back(f);
  }
  AomotoMatrix m = aomoto_matrix(a);
  std::vector<std::vector<MultiPoly>> sub(m.b2,
                                          std::vector<MultiPoly>(m.b1));
  for (int r = 0; r < m.b2; ++r)
    for (int j = 0; j < m.b1; ++j)
      sub[r][j] = m.rows[r][j].substitute(values, k);
  for (const auto& f : poly_minors(sub, size))
    if (!f.is_zero()) return false;
  return true;
}

SampleReport betti_formula_check(const TwoStepAlgebra& a,
                                 const TwoStepAlgebra& b, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw DomainError("betti_formula_check: trials must be >= 1");
  TwoStepAlgebra prod = tensor_algebra(a, b);
  TwoStepAlgebra wedge = coproduct_algebra(a, b);
  std::mt19937_64 rng(seed);
  SampleReport rep;
  std::ostringstream os;
  std::vector<Scalar> za(a.b1, Scalar(0)), zb(b.b1, Scalar(0));
  auto expect = [&](const char* what, long got, long want) {
    ++rep.trials;
    if (got == want) return;
    ++rep.failures;
    os << what << ": got " << got << ", want " << want << "\n";
  };
  // the origin: Betti numbers of the algebras themselves
  expect("tensor at 0", aomoto_b1(prod, concat(za, zb)), a.b1 + b.b1);
  expect("coproduct at 0", aomoto_b1(wedge, concat(za, zb)), a.b1 + b.b1);
  for (int t = 0; t < trials; ++t) {
    auto pa = nonzero_random_point(rng, a.b1);
    auto pb = nonzero_random_point(rng, b.b1);
    long b1a = aomoto_b1(a, pa), b1b = aomoto_b1(b, pb);
    expect("tensor, both coordinates nonzero",
           aomoto_b1(prod, concat(pa, pb)), 0);
    expect("tensor, second coordinate zero", aomoto_b1(prod, concat(pa, zb)),
           b1a);
    expect("tensor, first coordinate zero", aomoto_b1(prod, concat(za, pb)),
           b1b);
    expect("coproduct, both coordinates nonzero",
           aomoto_b1(wedge, concat(pa, pb)), b1a + b1b + 1);
    expect("coproduct, second coordinate zero",
           aomoto_b1(wedge, concat(pa, zb)), b1a + b.b1);
    expect("coproduct, first coordinate zero",
           aomoto_b1(wedge, concat(za, pb)), a.b1 + b1b);
  }
  rep.ok = rep.failures == 0;
  if (rep.ok)
    os << "product/coproduct Betti formulas hold on " << rep.trials
       << " checks";
  rep.report = os.str();
  return rep;
}

SampleReport lemma_resonance2_check(const TwoStepAlgebra& a, int points,
                                    std::uint64_t seed) {
  if (!a.top_degree_two)
    throw DomainError("lemma_resonance2_check: algebra not flagged top degree <= 2");
  std::mt19937_64 rng(seed);
  SampleReport rep;
  std::ostringstream os;
  long chi = a.euler();
  for (int t = 0; t < points; ++t) {
    auto pt = nonzero_random_point(rng, a.b1);
    long rank = rank_at_point(a, pt);
    long lhs = a.b2 - rank;               // b_2(A, a)
    long rhs = a.b1 - rank - 1 + chi;     // b_1(A, a) + chi
    ++rep.trials;
    if (lhs != rhs) {
      ++rep.failures;
      os << "sample " << t << ": b2(A,a)=" << lhs << " but b1(A,a)+chi=" << rhs
         << "\n";
    }
  }
  rep.ok = rep.failures == 0;
  if (rep.ok)
    os << "b2(A,a) = b1(A,a) + chi holds on " << rep.trials << " samples";
  rep.report = os.str();
  return rep;
}

}  // namespace grlie
