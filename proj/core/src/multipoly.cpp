#include "grlie/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace grlie {

namespace {

std::string term_str(const Expo& e, const Scalar& c,
                     const std::vector<std::string>& names, bool& first,
                     std::ostringstream& os) {
  Scalar a = c;
  if (first) {
    if (sgn(a) < 0) os << "-", a = -a;
  } else {
    os << (sgn(a) < 0 ? " - " : " + ");
    if (sgn(a) < 0) a = -a;
  }
  first = false;
  bool any_var = false;
  for (int ei : e) any_var = any_var || ei != 0;
  if (!any_var || a != 1) os << a.get_str();
  bool need_star = !any_var || a != 1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (need_star) os << "*";
    need_star = true;
    os << names[i];
    if (e[i] != 1) os << "^" << e[i];
  }
  return os.str();
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

void MultiPoly::add_term(const Expo& e, const Scalar& c) {
  if (grlie::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (grlie::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  Expo e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& s) const {
  if (grlie::is_zero(s)) return MultiPoly(nvars_);
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d < 0 || s < d) d = s;
  }
  return d;
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d < 0) d = s;
    else if (s != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& values,
                                int new_nvars) const {
  MultiPoly acc(new_nvars);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(new_nvars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * values[i];
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(terms_.rbegin()->second) < 0) factor = -factor;
  return *this * factor;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("exact_divide: division by zero");
  MultiPoly rem(*this), quot(nvars_);
  const auto& dlead = *divisor.terms_.rbegin();  // lex-leading term
  Expo e(nvars_);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    bool ok = true;
    for (int i = 0; i < nvars_; ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      ok = ok && e[i] >= 0;
    }
    if (!ok) throw DomainError("exact_divide: not divisible");
    MultiPoly qt(nvars_);
    qt.add_term(e, rlead.second / dlead.second);
    quot = quot + qt;
    rem = rem - qt * divisor;
  }
  return quot;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    term_str(it->first, it->second, var_names, first, os);
  return os.str();
}

// ---------------------------------------------------------------- Laurent

LaurentPoly LaurentPoly::constant(int nvars, const Scalar& c) {
  LaurentPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Expo& e, const Scalar& c) {
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Expo& e, const Scalar& c) {
  if (grlie::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (grlie::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(nvars_);
  Expo e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Expo LaurentPoly::min_exponents() const {
  Expo m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::shift(const Expo& s) const {
  LaurentPoly r(nvars_);
  Expo e(nvars_);
  for (const auto& [e1, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + s[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
      for (int k = 0; k > e[i]; --k) t /= point[i];
    }
    acc += t;
  }
  return acc;
}

MultiPoly LaurentPoly::substitute_one_plus_x() const {
  std::vector<MultiPoly> values;
  values.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i)
    values.push_back(MultiPoly::constant(nvars_, Scalar(1)) +
                     MultiPoly::variable(nvars_, i));
  MultiPoly acc(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] < 0) throw DomainError("substitute_one_plus_x: negative exponent");
      for (int k = 0; k < e[i]; ++k) t = t * values[i];
    }
    acc = acc + t;
  }
  return acc;
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    term_str(it->first, it->second, var_names, first, os);
  return os.str();
}

}  // namespace grlie
