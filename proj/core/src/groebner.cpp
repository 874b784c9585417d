#include "grlie/groebner.hpp"

#include <algorithm>
#include <list>
#include <numeric>

namespace grlie {

bool MonomialOrder::less(const Expo& a, const Expo& b) const {
  int n = (int)a.size();
  auto at = [&](const Expo& e, int i) { return perm.empty() ? e[i] : e[perm[i]]; };
  if (kind == lex) {
    for (int i = 0; i < n; ++i) {
      if (at(a, i) != at(b, i)) return at(a, i) < at(b, i);
    }
    return false;
  }
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  // grevlex tie-break: the last position where they differ decides,
  // larger exponent there means smaller monomial
  for (int i = n - 1; i >= 0; --i) {
    if (at(a, i) != at(b, i)) return at(a, i) > at(b, i);
  }
  return false;
}

std::pair<Expo, Scalar> leading_term(const MultiPoly& f, const MonomialOrder& o) {
  if (f.is_zero()) throw DomainError("leading_term: zero polynomial");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (o.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

namespace {

bool divides(const Expo& a, const Expo& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

MultiPoly monomial_times(const MultiPoly& f, const Expo& m, const Scalar& c) {
  MultiPoly r(f.nvars());
  Expo e(f.nvars());
  for (const auto& [fe, fc] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i) e[i] = fe[i] + m[i];
    r.add_term(e, fc * c);
  }
  return r;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& o) {
  if (basis.empty()) return f;
  std::vector<std::pair<Expo, Scalar>> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(leading_term(g, o));
  MultiPoly rem(f.nvars());
  MultiPoly work = f;
  while (!work.is_zero()) {
    auto [lm, lc] = leading_term(work, o);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lts[i].first, lm)) continue;
      work = work - monomial_times(basis[i], expo_sub(lm, lts[i].first),
                                   lc / lts[i].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      MultiPoly lt(f.nvars());
      lt.add_term(lm, lc);
      work = work - lt;
    }
  }
  return rem;
}

namespace {

struct Pair {
  int i, j;
  Expo lcm;
  int deg;
};

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                  const MonomialOrder& o) {
  std::vector<MultiPoly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.primitive_part());
  if (G.empty()) return {};

  std::vector<std::pair<Expo, Scalar>> lts;
  for (const auto& g : G) lts.push_back(leading_term(g, o));

  std::list<Pair> pairs;
  auto push_pairs_for = [&](int t) {
    // Gebauer-Moeller style update for new element t
    const Expo& lt_t = lts[t].first;
    // B criterion: drop old pairs whose lcm is strictly refined by t
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (divides(lt_t, it->lcm) &&
          expo_lcm(lts[it->i].first, lt_t) != it->lcm &&
          expo_lcm(lts[it->j].first, lt_t) != it->lcm)
        it = pairs.erase(it);
      else
        ++it;
    }
    // candidate new pairs, pruned among themselves (M criterion) and by
    // the coprimality criterion
    std::vector<Pair> cand;
    for (int i = 0; i < t; ++i) {
      Expo l = expo_lcm(lts[i].first, lt_t);
      cand.push_back({i, t, l, std::accumulate(l.begin(), l.end(), 0)});
    }
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a)
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a] || drop[b]) continue;
        if (cand[b].lcm != cand[a].lcm && divides(cand[b].lcm, cand[a].lcm))
          drop[a] = true;
      }
    // among equal lcms keep one
    for (size_t a = 0; a < cand.size(); ++a)
      for (size_t b = a + 1; b < cand.size(); ++b)
        if (!drop[a] && !drop[b] && cand[a].lcm == cand[b].lcm) drop[b] = true;
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      if (coprime(lts[cand[a].i].first, lt_t)) continue;
      pairs.push_back(cand[a]);
    }
  };
  for (int t = 1; t < (int)G.size(); ++t) push_pairs_for(t);

  while (!pairs.empty()) {
    // normal strategy: smallest lcm in the order
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (o.less(it->lcm, best->lcm)) best = it;
    Pair p = *best;
    pairs.erase(best);

    const auto& [lmi, lci] = lts[p.i];
    const auto& [lmj, lcj] = lts[p.j];
    MultiPoly spoly =
        monomial_times(G[p.i], expo_sub(p.lcm, lmi), Scalar(1) / lci) -
        monomial_times(G[p.j], expo_sub(p.lcm, lmj), Scalar(1) / lcj);
    MultiPoly r = normal_form(spoly, G, o);
    if (r.is_zero()) continue;
    G.push_back(r.primitive_part());
    lts.push_back(leading_term(G.back(), o));
    push_pairs_for((int)G.size() - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by another
  std::vector<bool> keep(G.size(), true);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (divides(lts[j].first, lts[i].first) &&
          (lts[j].first != lts[i].first || j < i))
        keep[i] = false;
    }
  std::vector<MultiPoly> M;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(G[i]);

  // reduce: replace each element by its normal form against the others,
  // then make monic; sort by leading monomial for determinism
  std::vector<MultiPoly> R;
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    MultiPoly r = normal_form(M[i], others, o);
    if (r.is_zero()) continue;
    auto [lm, lc] = leading_term(r, o);
    R.push_back(r * (Scalar(1) / lc));
  }
  std::sort(R.begin(), R.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return o.less(leading_term(a, o).first, leading_term(b, o).first);
  });
  return R;
}

const std::vector<MultiPoly>& Ideal::groebner(const MonomialOrder& o) const {
  if (gb_ && gb_order_.kind == o.kind && gb_order_.perm == o.perm) return *gb_;
  gb_ = buchberger(gens, o);
  gb_order_ = o;
  return *gb_;
}

bool ideal_membership(const MultiPoly& f, const Ideal& I) {
  MonomialOrder o;
  return normal_form(f, I.groebner(o), o).is_zero();
}

bool radical_membership(const MultiPoly& f, const Ideal& I) {
  if (f.is_zero()) return true;
  MonomialOrder o;
  const auto& gb = I.groebner(o);
  MultiPoly pw = f;
  for (int k = 1; k <= 3; ++k) {
    if (normal_form(pw, gb, o).is_zero()) return true;
    pw = pw * f;
  }
  // Rabinowitsch: adjoin y and the generator 1 - y f
  int nv = I.nvars, nv2 = nv + 1;
  auto extend = [&](const MultiPoly& p) {
    MultiPoly q(nv2);
    for (const auto& [e, c] : p.terms()) {
      Expo e2 = e;
      e2.push_back(0);
      q.add_term(e2, c);
    }
    return q;
  };
  std::vector<MultiPoly> gens2;
  for (const auto& g : I.gens) gens2.push_back(extend(g));
  MultiPoly yf = extend(f) * MultiPoly::variable(nv2, nv);
  gens2.push_back(MultiPoly::constant(nv2, Scalar(1)) - yf);
  auto gb2 = buchberger(gens2, o);
  return gb2.size() == 1 && gb2[0].total_degree() == 0;
}

int krull_dimension(const Ideal& I) {
  MonomialOrder o;
  const auto& gb = I.groebner(o);
  if (gb.empty()) return I.nvars;
  std::vector<Expo> lms;
  for (const auto& g : gb) {
    if (g.total_degree() == 0) return -1;
    lms.push_back(leading_term(g, o).first);
  }
  int n = I.nvars;
  if (n > 30) throw ResourceError("krull_dimension: too many variables");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz <= best) continue;
    bool independent = true;
    for (const auto& lm : lms) {
      bool contained = true;
      for (int i = 0; i < n && contained; ++i)
        if (lm[i] > 0 && !(mask >> i & 1)) contained = false;
      if (contained) { independent = false; break; }
    }
    if (independent) best = sz;
  }
  return best;
}

}  // namespace grlie
