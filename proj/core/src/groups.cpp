#include "grlie/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace grlie {

void Word::append(int gen, int exp) {
  if (exp != 1 && exp != -1) throw DomainError("Word: exponent must be +-1");
  if (!ls_.empty() && ls_.back().gen == gen && ls_.back().exp == -exp)
    ls_.pop_back();
  else
    ls_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const auto& l : w.ls_) append(l.gen, l.exp);
}

Word Word::inverse() const {
  Word r;
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
    r.append(it->gen, -it->exp);
  return r;
}

std::vector<long long> Word::abelianized(int ngens) const {
  std::vector<long long> e(ngens, 0);
  for (const auto& l : ls_) e[l.gen] += l.exp;
  return e;
}

Word commutator(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  r.append(a.inverse());
  r.append(b.inverse());
  return r;
}

void GroupPresentation::validate() const {
  for (const auto& r : relators) {
    if (r.empty()) throw DomainError("presentation: empty relator");
    for (const auto& l : r.letters())
      if (l.gen < 0 || l.gen >= ngens())
        throw DomainError("presentation: relator uses unknown generator");
  }
}

namespace {

Word gen_word(int g) {
  Word w;
  w.append(g, 1);
  return w;
}

// a b c (c b a)^-1  =  a b c a^-1 b^-1 c^-1
Word triple_relator(int a, int b, int c) {
  Word w;
  w.append(a, 1);
  w.append(b, 1);
  w.append(c, 1);
  w.append(a, -1);
  w.append(b, -1);
  w.append(c, -1);
  return w;
}

}  // namespace

GroupPresentation free_group(int n) {
  if (n < 1) throw DomainError("free_group: n >= 1");
  GroupPresentation g;
  g.label = "F" + std::to_string(n);
  for (int i = 1; i <= n; ++i) g.generators.push_back("x" + std::to_string(i));
  return g;
}

GroupPresentation integers_group() {
  GroupPresentation g = free_group(1);
  g.label = "Z";
  return g;
}

GroupPresentation abelian_group(int k) {
  GroupPresentation g = free_group(k);
  g.label = "Z^" + std::to_string(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      g.relators.push_back(commutator(gen_word(i), gen_word(j)));
  return g;
}

GroupPresentation vP(int n) {
  if (n < 2) throw DomainError("vP: n >= 2");
  GroupPresentation g;
  g.label = "vP" + std::to_string(n);
  std::map<std::pair<int, int>, int> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      idx[{i, j}] = g.ngens();
      g.generators.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      idx[{i, j}] = g.ngens();
      g.generators.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  // x_ij x_ik x_jk = x_jk x_ik x_ij for every ordered triple of distinct
  // indices
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        g.relators.push_back(
            triple_relator(idx[{i, j}], idx[{i, k}], idx[{j, k}]));
      }
  // [x_ij, x_kl] for disjoint supports, one per unordered generator pair
  for (int a = 0; a < g.ngens(); ++a)
    for (int b = a + 1; b < g.ngens(); ++b) {
      auto pa = std::find_if(idx.begin(), idx.end(),
                             [&](auto& kv) { return kv.second == a; });
      auto pb = std::find_if(idx.begin(), idx.end(),
                             [&](auto& kv) { return kv.second == b; });
      std::set<int> sup{pa->first.first, pa->first.second, pb->first.first,
                        pb->first.second};
      if (sup.size() == 4)
        g.relators.push_back(commutator(gen_word(a), gen_word(b)));
    }
  return g;
}

GroupPresentation vP_plus(int n) {
  if (n < 2) throw DomainError("vP_plus: n >= 2");
  GroupPresentation g;
  g.label = "vP" + std::to_string(n) + "+";
  std::map<std::pair<int, int>, int> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      idx[{i, j}] = g.ngens();
      g.generators.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        g.relators.push_back(
            triple_relator(idx[{i, j}], idx[{i, k}], idx[{j, k}]));
  for (const auto& [e1, a] : idx)
    for (const auto& [e2, b] : idx) {
      if (b <= a) continue;
      std::set<int> sup{e1.first, e1.second, e2.first, e2.second};
      if (sup.size() == 4)
        g.relators.push_back(commutator(gen_word(a), gen_word(b)));
    }
  return g;
}

GroupPresentation pbar4() {
  GroupPresentation g;
  g.label = "Pbar4";
  for (int i = 1; i <= 5; ++i) g.generators.push_back("z" + std::to_string(i));
  const int z1 = 0, z2 = 1, z3 = 2, z4 = 3, z5 = 4;
  g.relators.push_back(commutator(gen_word(z2), gen_word(z3)));
  // z2^-1 z4 z2 commutes with z1
  Word conj;
  conj.append(z2, -1);
  conj.append(z4, 1);
  conj.append(z2, 1);
  g.relators.push_back(commutator(conj, gen_word(z1)));
  // z5 z3 z1 = z3 z1 z5 = z1 z5 z3 : two relators per chain
  auto chain = [&](int a, int b, int c) {
    Word u;  // a b c (b c a)^-1
    u.append(a, 1);
    u.append(b, 1);
    u.append(c, 1);
    u.append(a, -1);
    u.append(c, -1);
    u.append(b, -1);
    g.relators.push_back(u);
    Word v;  // b c a (c a b)^-1
    v.append(b, 1);
    v.append(c, 1);
    v.append(a, 1);
    v.append(b, -1);
    v.append(a, -1);
    v.append(c, -1);
    g.relators.push_back(v);
  };
  chain(z5, z3, z1);
  chain(z5, z4, z2);
  return g;
}

GroupPresentation family(const std::string& name, int n) {
  if (name == "free") return free_group(n);
  if (name == "integers") return integers_group();
  if (name == "abelian") return abelian_group(n);
  if (name == "vP") return vP(n);
  if (name == "vP_plus") return vP_plus(n);
  if (name == "pbar4") return pbar4();
  throw DomainError("unknown group family: " + name);
}

namespace {

GroupPresentation concat(const GroupPresentation& g, const GroupPresentation& h) {
  GroupPresentation r;
  r.generators = g.generators;
  std::set<std::string> used(r.generators.begin(), r.generators.end());
  for (auto name : h.generators) {
    while (used.count(name)) name += "'";
    used.insert(name);
    r.generators.push_back(name);
  }
  r.relators = g.relators;
  int off = g.ngens();
  for (const auto& w : h.relators) {
    Word s;
    for (const auto& l : w.letters()) s.append(l.gen + off, l.exp);
    r.relators.push_back(s);
  }
  return r;
}

}  // namespace

GroupPresentation free_product(const GroupPresentation& g,
                               const GroupPresentation& h) {
  GroupPresentation r = concat(g, h);
  r.label = g.label + "*" + h.label;
  return r;
}

GroupPresentation direct_product(const GroupPresentation& g,
                                 const GroupPresentation& h) {
  GroupPresentation r = concat(g, h);
  r.label = g.label + "x" + h.label;
  for (int i = 0; i < g.ngens(); ++i)
    for (int j = 0; j < h.ngens(); ++j)
      r.relators.push_back(commutator(gen_word(i), gen_word(g.ngens() + j)));
  return r;
}

bool is_commutator_relators(const GroupPresentation& g) {
  for (const auto& r : g.relators)
    for (long long e : r.abelianized(g.ngens()))
      if (e != 0) return false;
  return true;
}

std::vector<LaurentPoly> fox_row(const Word& w, int ngens) {
  std::vector<LaurentPoly> row(ngens, LaurentPoly(ngens));
  Expo prefix(ngens, 0);  // abelianization of the prefix read so far
  for (const auto& l : w.letters()) {
    if (l.exp == 1) {
      row[l.gen].add_term(prefix, Scalar(1));
      prefix[l.gen] += 1;
    } else {
      prefix[l.gen] -= 1;
      row[l.gen].add_term(prefix, Scalar(-1));
    }
  }
  return row;
}

std::vector<std::vector<LaurentPoly>> fox_matrix(const GroupPresentation& g) {
  if (!is_commutator_relators(g))
    throw DomainError("fox_matrix: relator with nonzero exponent sum");
  std::vector<std::vector<LaurentPoly>> m;
  m.reserve(g.relators.size());
  for (const auto& r : g.relators) m.push_back(fox_row(r, g.ngens()));
  return m;
}

std::string presentation_to_json(const GroupPresentation& g) {
  nlohmann::json j;
  j["generators"] = g.generators;
  auto& rel = j["relators"] = nlohmann::json::array();
  for (const auto& w : g.relators) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto& l : w.letters()) {
      std::string t = g.generators[l.gen];
      if (l.exp == -1) t += "^-1";
      tokens.push_back(t);
    }
    rel.push_back(tokens);
  }
  return j.dump(2);
}

GroupPresentation presentation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("presentation JSON: ") + e.what());
  }
  GroupPresentation g;
  if (!j.contains("generators") || !j["generators"].is_array())
    throw DomainError("presentation JSON: missing generators array");
  std::map<std::string, int> index;
  for (const auto& name : j["generators"]) {
    if (!name.is_string())
      throw DomainError("presentation JSON: generator names must be strings");
    std::string s = name.get<std::string>();
    if (index.count(s))
      throw DomainError("presentation JSON: duplicate generator " + s);
    index[s] = g.ngens();
    g.generators.push_back(s);
  }
  if (j.contains("relators")) {
    if (!j["relators"].is_array())
      throw DomainError("presentation JSON: relators must be an array");
    for (const auto& tokens : j["relators"]) {
      Word w;
      for (const auto& tok : tokens) {
        std::string s = tok.get<std::string>();
        int exp = 1;
        if (auto pos = s.rfind("^-1"); pos != std::string::npos &&
                                       pos + 3 == s.size()) {
          exp = -1;
          s = s.substr(0, pos);
        }
        auto it = index.find(s);
        if (it == index.end())
          throw DomainError("presentation JSON: unknown generator " + s);
        w.append(it->second, exp);
      }
      if (w.empty())
        throw DomainError("presentation JSON: relator reduces to the empty word");
      g.relators.push_back(w);
    }
  }
  g.label = "custom";
  return g;
}

}  // namespace grlie
