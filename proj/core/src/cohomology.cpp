#include "grlie/cohomology.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "grlie/biseries.hpp"
#include "grlie/combinatorics.hpp"

namespace grlie {

int TwoStepAlgebra::pair_index(int i, int j, int b1) {
  // (i,j), i<j, lexicographic
  return i * b1 - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Scalar> TwoStepAlgebra::product(int i, int j) const {
  std::vector<Scalar> col(b2, Scalar(0));
  if (i == j) return col;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  int c = pair_index(i, j, b1);
  for (int r = 0; r < b2; ++r) col[r] = sign * cup[r][c];
  return col;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Scalar>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int nr = (int)m.size(), nc = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!is_zero(m[i][c])) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Scalar s = 1 / m[r][c];
    for (int j = c; j < nc; ++j) m[r][j] *= s;
    for (int i = 0; i < nr; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Scalar f = m[i][c];
      for (int j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Quotient of a coordinate space by the row span of `rels`:
// basis = non-pivot coordinates; fills the projection matrix
// (dim_quotient x dim_ambient) and the list of kept coordinates.
void quotient_projection(std::vector<std::vector<Scalar>> rels, int ambient,
                         std::vector<int>& kept,
                         std::vector<std::vector<Scalar>>& proj) {
  std::vector<int> pivots = rref(rels);
  std::vector<int> pivot_row(ambient, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = (int)r;
  kept.clear();
  for (int c = 0; c < ambient; ++c)
    if (pivot_row[c] < 0) kept.push_back(c);
  int q = (int)kept.size();
  proj.assign(q, std::vector<Scalar>(ambient, Scalar(0)));
  for (int k = 0; k < q; ++k) proj[k][kept[k]] = 1;
  for (int c = 0; c < ambient; ++c) {
    int r = pivot_row[c];
    if (r < 0) continue;
    // e_c = -sum over kept coordinates of rels[r]
    for (int k = 0; k < q; ++k) proj[k][c] = -rels[r][kept[k]];
  }
}

std::vector<Scalar> mat_apply(const std::vector<std::vector<Scalar>>& m,
                          const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.size(), Scalar(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

TwoStepAlgebra quadratic_algebra(
    const std::vector<std::string>& basis1,
    const std::vector<std::vector<Scalar>>& relations) {
  TwoStepAlgebra a;
  a.b1 = (int)basis1.size();
  a.basis1 = basis1;
  int P = a.npairs();
  for (const auto& r : relations)
    if ((int)r.size() != P)
      throw DomainError("quadratic_algebra: relation has wrong length");
  std::vector<int> kept;
  std::vector<std::vector<Scalar>> proj;
  quotient_projection(relations, P, kept, proj);
  a.b2 = (int)kept.size();
  a.cup = std::move(proj);
  for (int c : kept) {
    // recover (i,j) from the pair index
    int i = 0, j = 0, idx = c;
    for (i = 0; i < a.b1; ++i) {
      int row = a.b1 - 1 - i;
      if (idx < row) { j = i + 1 + idx; break; }
      idx -= row;
    }
    a.basis2.push_back(basis1[i] + "^" + basis1[j]);
  }
  return a;
}

namespace {

// wedge-coordinate vector of e_p * e_q (signs for p > q)
void add_wedge(std::vector<Scalar>& v, int p, int q, const Scalar& c, int b1) {
  if (p == q) return;
  if (p < q)
    v[TwoStepAlgebra::pair_index(p, q, b1)] += c;
  else
    v[TwoStepAlgebra::pair_index(q, p, b1)] -= c;
}

}  // namespace

TwoStepAlgebra algebra_family(const std::string& name, int n) {
  if (name == "free") {
    std::vector<std::string> basis1;
    for (int i = 1; i <= n; ++i) basis1.push_back("e" + std::to_string(i));
    int P = n * (n - 1) / 2;
    std::vector<std::vector<Scalar>> rels;
    for (int c = 0; c < P; ++c) {
      std::vector<Scalar> r(P, Scalar(0));
      r[c] = 1;
      rels.push_back(r);
    }
    auto a = quadratic_algebra(basis1, rels);
    a.label = "free" + std::to_string(n);
    return a;
  }
  if (name == "abelian") {
    std::vector<std::string> basis1;
    for (int i = 1; i <= n; ++i) basis1.push_back("e" + std::to_string(i));
    auto a = quadratic_algebra(basis1, {});
    a.label = "abelian" + std::to_string(n);
    return a;
  }
  if (name == "arnold") {
    if (n < 2) throw DomainError("arnold: n >= 2");
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::string> basis1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        idx[{i, j}] = (int)basis1.size();
        basis1.push_back("a" + std::to_string(i) + std::to_string(j));
      }
    int b1 = (int)basis1.size(), P = b1 * (b1 - 1) / 2;
    std::vector<std::vector<Scalar>> rels;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          // a_ik a_jk - a_ij a_jk + a_ij a_ik = 0
          std::vector<Scalar> r(P, Scalar(0));
          add_wedge(r, idx[{i, k}], idx[{j, k}], Scalar(1), b1);
          add_wedge(r, idx[{i, j}], idx[{j, k}], Scalar(-1), b1);
          add_wedge(r, idx[{i, j}], idx[{i, k}], Scalar(1), b1);
          rels.push_back(r);
        }
    auto a = quadratic_algebra(basis1, rels);
    a.label = "arnold" + std::to_string(n);
    return a;
  }
  if (name == "beer_vP") {
    if (n < 2) throw DomainError("beer_vP: n >= 2");
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::string> basis1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        idx[{i, j}] = (int)basis1.size();
        basis1.push_back("a" + std::to_string(i) + std::to_string(j));
      }
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        idx[{i, j}] = (int)basis1.size();
        basis1.push_back("a" + std::to_string(i) + std::to_string(j));
      }
    int b1 = (int)basis1.size(), P = b1 * (b1 - 1) / 2;
    std::vector<std::vector<Scalar>> rels;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          // a_ij a_ik - a_ij a_jk + a_ik a_kj = 0
          std::vector<Scalar> r1(P, Scalar(0));
          add_wedge(r1, idx[{i, j}], idx[{i, k}], Scalar(1), b1);
          add_wedge(r1, idx[{i, j}], idx[{j, k}], Scalar(-1), b1);
          add_wedge(r1, idx[{i, k}], idx[{k, j}], Scalar(1), b1);
          rels.push_back(r1);
          // a_ik a_jk - a_ij a_jk + a_ji a_ik = 0
          std::vector<Scalar> r2(P, Scalar(0));
          add_wedge(r2, idx[{i, k}], idx[{j, k}], Scalar(1), b1);
          add_wedge(r2, idx[{i, j}], idx[{j, k}], Scalar(-1), b1);
          add_wedge(r2, idx[{j, i}], idx[{i, k}], Scalar(1), b1);
          rels.push_back(r2);
        }
        if (i < j) {
          std::vector<Scalar> r3(P, Scalar(0));
          add_wedge(r3, idx[{i, j}], idx[{j, i}], Scalar(1), b1);
          rels.push_back(r3);
        }
      }
    auto a = quadratic_algebra(basis1, rels);
    a.label = "beer_vP" + std::to_string(n);
    return a;
  }
  if (name == "beer_vP_plus") {
    if (n < 2) throw DomainError("beer_vP_plus: n >= 2");
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::string> basis1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        idx[{i, j}] = (int)basis1.size();
        basis1.push_back("e" + std::to_string(i) + std::to_string(j));
      }
    int b1 = (int)basis1.size(), P = b1 * (b1 - 1) / 2;
    std::vector<std::vector<Scalar>> rels;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          // e_ij e_ik - e_ij e_jk = 0
          std::vector<Scalar> r1(P, Scalar(0));
          add_wedge(r1, idx[{i, j}], idx[{i, k}], Scalar(1), b1);
          add_wedge(r1, idx[{i, j}], idx[{j, k}], Scalar(-1), b1);
          rels.push_back(r1);
          // e_ij e_jk - e_ik e_jk = 0
          std::vector<Scalar> r2(P, Scalar(0));
          add_wedge(r2, idx[{i, j}], idx[{j, k}], Scalar(1), b1);
          add_wedge(r2, idx[{i, k}], idx[{j, k}], Scalar(-1), b1);
          rels.push_back(r2);
        }
    auto a = quadratic_algebra(basis1, rels);
    a.label = "beer_vP" + std::to_string(n) + "+";
    return a;
  }
  throw DomainError("unknown algebra family: " + name);
}

TwoStepAlgebra quotient_by_degree_one(const TwoStepAlgebra& a,
                                      const std::vector<Scalar>& z) {
  if ((int)z.size() != a.b1)
    throw DomainError("quotient_by_degree_one: wrong vector length");
  int p = -1;
  for (int i = 0; i < a.b1; ++i)
    if (!is_zero(z[i])) { p = i; break; }
  if (p < 0) throw DomainError("quotient_by_degree_one: zero element");

  TwoStepAlgebra q;
  std::vector<int> keep1;
  for (int i = 0; i < a.b1; ++i)
    if (i != p) {
      keep1.push_back(i);
      q.basis1.push_back(a.basis1[i]);
    }
  q.b1 = (int)keep1.size();

  // span of z * A^1 inside A^2
  std::vector<std::vector<Scalar>> zspan;
  for (int k = 0; k < a.b1; ++k) {
    std::vector<Scalar> w(a.npairs(), Scalar(0));
    for (int i = 0; i < a.b1; ++i) add_wedge(w, i, k, z[i], a.b1);
    std::vector<Scalar> v(a.b2, Scalar(0));
    for (int c = 0; c < a.npairs(); ++c)
      if (!is_zero(w[c]))
        for (int r = 0; r < a.b2; ++r) v[r] += a.cup[r][c] * w[c];
    zspan.push_back(v);
  }
  std::vector<int> kept2;
  std::vector<std::vector<Scalar>> proj2;
  quotient_projection(zspan, a.b2, kept2, proj2);
  q.b2 = (int)kept2.size();
  for (int c : kept2) q.basis2.push_back(a.basis2[c]);

  q.cup.assign(q.b2, std::vector<Scalar>(q.npairs(), Scalar(0)));
  for (int x = 0; x < q.b1; ++x)
    for (int y = x + 1; y < q.b1; ++y) {
      std::vector<Scalar> col = a.product(keep1[x], keep1[y]);
      std::vector<Scalar> qcol = mat_apply(proj2, col);
      int c = TwoStepAlgebra::pair_index(x, y, q.b1);
      for (int r = 0; r < q.b2; ++r) q.cup[r][c] = qcol[r];
    }
  return q;
}

TwoStepAlgebra pbar4_algebra() {
  TwoStepAlgebra a4 = algebra_family("arnold", 4);
  std::vector<Scalar> z(a4.b1, Scalar(1));
  TwoStepAlgebra q = quotient_by_degree_one(a4, z);
  q.top_degree_two = true;
  q.label = "Pbar4";
  return q;
}

TwoStepAlgebra tensor_algebra(const TwoStepAlgebra& a, const TwoStepAlgebra& b) {
  TwoStepAlgebra t;
  t.label = a.label + "(x)" + b.label;
  t.b1 = a.b1 + b.b1;
  t.basis1 = a.basis1;
  t.basis1.insert(t.basis1.end(), b.basis1.begin(), b.basis1.end());
  t.b2 = a.b2 + a.b1 * b.b1 + b.b2;
  t.basis2 = a.basis2;
  for (int i = 0; i < a.b1; ++i)
    for (int j = 0; j < b.b1; ++j)
      t.basis2.push_back(a.basis1[i] + "^" + b.basis1[j]);
  t.basis2.insert(t.basis2.end(), b.basis2.begin(), b.basis2.end());
  t.cup.assign(t.b2, std::vector<Scalar>(t.npairs(), Scalar(0)));
  for (int i = 0; i < t.b1; ++i)
    for (int j = i + 1; j < t.b1; ++j) {
      int c = TwoStepAlgebra::pair_index(i, j, t.b1);
      if (j < a.b1) {
        auto col = a.product(i, j);
        for (int r = 0; r < a.b2; ++r) t.cup[r][c] = col[r];
      } else if (i >= a.b1) {
        auto col = b.product(i - a.b1, j - a.b1);
        for (int r = 0; r < b.b2; ++r)
          t.cup[a.b2 + a.b1 * b.b1 + r][c] = col[r];
      } else {
        t.cup[a.b2 + i * b.b1 + (j - a.b1)][c] = 1;
      }
    }
  return t;
}

TwoStepAlgebra coproduct_algebra(const TwoStepAlgebra& a,
                                 const TwoStepAlgebra& b) {
  TwoStepAlgebra t;
  t.label = a.label + "(v)" + b.label;
  t.b1 = a.b1 + b.b1;
  t.basis1 = a.basis1;
  t.basis1.insert(t.basis1.end(), b.basis1.begin(), b.basis1.end());
  t.b2 = a.b2 + b.b2;
  t.basis2 = a.basis2;
  t.basis2.insert(t.basis2.end(), b.basis2.begin(), b.basis2.end());
  t.cup.assign(t.b2, std::vector<Scalar>(t.npairs(), Scalar(0)));
  for (int i = 0; i < t.b1; ++i)
    for (int j = i + 1; j < t.b1; ++j) {
      int c = TwoStepAlgebra::pair_index(i, j, t.b1);
      if (j < a.b1) {
        auto col = a.product(i, j);
        for (int r = 0; r < a.b2; ++r) t.cup[r][c] = col[r];
      } else if (i >= a.b1) {
        auto col = b.product(i - a.b1, j - a.b1);
        for (int r = 0; r < b.b2; ++r) t.cup[a.b2 + r][c] = col[r];
      }
      // cross products vanish
    }
  return t;
}

UniPoly poincare_closed(const std::string& family, int n) {
  if (n < 1) throw DomainError("poincare_closed: n >= 1");
  if (family == "P") {
    UniPoly p = UniPoly::constant(Scalar(1));
    for (int k = 1; k < n; ++k)
      p = p * UniPoly(std::vector<Scalar>{Scalar(1), Scalar(k)});
    return p;
  }
  SpecialKind kind;
  if (family == "vP")
    kind = SpecialKind::lah;
  else if (family == "vP_plus")
    kind = SpecialKind::stirling2;
  else
    throw DomainError("poincare_closed: unknown family " + family);
  std::vector<Scalar> c(n, Scalar(0));
  for (int i = 0; i < n; ++i) c[i] = Scalar(special_number(kind, n, n - i));
  return UniPoly(std::move(c));
}

EgfCheckResult egf_identity_check(const std::string& family, int order) {
  if (order > 8) throw DomainError("egf_identity_check: order <= 8");
  BiSeries g(0, 0);
  if (family == "P")
    g = BiSeries::neg_log_one_minus_tu_over_t(order, order);
  else if (family == "vP")
    g = BiSeries::u_over_one_minus_tu(order, order);
  else if (family == "vP_plus")
    g = BiSeries::exp_tu_minus_one_over_t(order, order);
  else
    throw DomainError("egf_identity_check: unknown family " + family);
  BiSeries e = BiSeries::exp(g);
  EgfCheckResult res;
  std::ostringstream rep;
  for (int n = 1; n <= order; ++n) {
    UniPoly lhs = e.u_coefficient(n) * Scalar(factorial(n));
    UniPoly rhs = poincare_closed(family, n);
    if (!(lhs == rhs)) {
      res.ok = false;
      rep << "n=" << n << ": egf gives " << lhs.str() << ", closed form "
          << rhs.str() << "\n";
    }
  }
  if (res.ok)
    rep << "egf identities hold for " << family << " through order " << order;
  res.report = rep.str();
  return res;
}

std::string algebra_to_json(const TwoStepAlgebra& a) {
  nlohmann::json j;
  j["label"] = a.label;
  j["b1"] = a.b1;
  j["basis1"] = a.basis1;
  j["b2"] = a.b2;
  j["basis2"] = a.basis2;
  j["top_degree_two"] = a.top_degree_two;
  auto& cup = j["cup"] = nlohmann::json::array();
  for (const auto& row : a.cup) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(Scalar(v).get_str());
    cup.push_back(r);
  }
  return j.dump(2);
}

}  // namespace grlie
