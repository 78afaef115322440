#include "bdcluster/poly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>

namespace bdc {

bool Monomial::divides(const Monomial& m) const {
  if (deg > m.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > m.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exp[i]) + o.exp[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exp[i] = std::uint8_t(s);
  }
  r.deg = std::uint16_t(deg + o.deg);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::uint8_t(m.exp[i] - exp[i]);
  r.deg = std::uint16_t(m.deg - deg);
  return r;
}

int Monomial::lowest_var() const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i]) return i;
  return -1;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_cmp(a.mono, b.mono) > 0; }

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// Sort descending and combine equal monomials, dropping zeros.
void canonicalize(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    mpq_class c = t[i].coef;
    while (j < t.size() && t[j].mono == t[i].mono) c += t[j++].coef;
    if (c != 0) {
      if (out != i) t[out].mono = t[i].mono;
      t[out].coef = c;
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grlex_cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract) r.back().coef = -r.back().coef;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].coef - b[j].coef) : mpq_class(a[i].coef + b[j].coef);
      if (s != 0) r.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpq_class(c)});
}

Polynomial::Polynomial(const mpq_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::var(int row, int col) {
  if (row < 1 || row > kMaxDim || col < 1 || col > kMaxDim)
    throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[Variable{row, col}.index()] = 1;
  m.deg = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

mpq_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_[0].mono.is_one() || terms_.size() != 1) throw std::logic_error("not a constant");
  return terms_[0].coef;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.exp[v]));
  return d;
}

std::vector<int> Polynomial::variables() const {
  std::array<bool, kMaxVars> seen{};
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i]) seen[i] = true;
  std::vector<int> r;
  for (int i = 0; i < kMaxVars; ++i)
    if (seen[i]) r.push_back(i);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].mono.is_one()) return b.scaled(a.terms_[0].coef);
  if (b.size() == 1 && b.terms_[0].mono.is_one()) return a.scaled(b.terms_[0].coef);
  std::vector<Term> t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({x.mono * y.mono, x.coef * y.coef});
  return Polynomial::from_terms(std::move(t));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::derivative(Variable v) const {
  int idx = v.index();
  std::vector<Term> t;
  for (const auto& x : terms_) {
    if (!x.mono.exp[idx]) continue;
    Term y = x;
    y.coef *= x.mono.exp[idx];
    y.mono.exp[idx]--;
    y.mono.deg--;
    t.push_back(std::move(y));
  }
  return from_terms(std::move(t));
}

Polynomial Polynomial::substitute(const std::function<Polynomial(Variable)>& sub) const {
  std::vector<int> vars = variables();
  std::vector<std::vector<Polynomial>> powers(kMaxVars);
  for (int v : vars) powers[v].push_back(Polynomial(1));
  Polynomial r;
  std::vector<Polynomial> images(kMaxVars);
  for (int v : vars) images[v] = sub(Variable::from_index(v));
  for (const auto& t : terms_) {
    Polynomial m(t.coef);
    for (int v : vars) {
      int e = t.mono.exp[v];
      if (!e) continue;
      auto& pw = powers[v];
      while (int(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
      m = m * pw[e];
    }
    r += m;
  }
  return r;
}

mpq_class Polynomial::eval(const std::function<mpq_class(Variable)>& val) const {
  std::vector<int> vars = variables();
  std::array<mpq_class, kMaxVars> x;
  for (int v : vars) x[v] = val(Variable::from_index(v));
  mpq_class s = 0;
  for (const auto& t : terms_) {
    mpq_class m = t.coef;
    for (int v : vars)
      for (int e = 0; e < t.mono.exp[v]; ++e) m *= x[v];
    s += m;
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.get_str();
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.mono.exp[i]) continue;
      Variable v = Variable::from_index(i);
      os << " * x[" << v.row << ',' << v.col << "]^" << int(t.mono.exp[i]);
    }
  }
  return os.str();
}

bool try_divide(const Polynomial& f, const Polynomial& g, Polynomial& q) {
  if (g.is_zero()) throw DivideByZero();
  if (f.is_zero()) {
    q = Polynomial();
    return true;
  }
  const Term& lg = g.leading();
  if (g.size() == 1) {
    std::vector<Term> t;
    t.reserve(f.size());
    for (const auto& x : f.terms()) {
      if (!lg.mono.divides(x.mono)) return false;
      t.push_back({lg.mono.quotient_of(x.mono), x.coef / lg.coef});
    }
    q = Polynomial::from_terms(std::move(t));
    return true;
  }
  if (f.total_degree() < g.total_degree()) return false;
  std::map<Monomial, mpq_class, MonoGreater> rem;
  for (const auto& x : f.terms()) rem.emplace_hint(rem.end(), x.mono, x.coef);
  std::vector<Term> qt;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lg.mono.divides(it->first)) return false;
    Monomial m = lg.mono.quotient_of(it->first);
    mpq_class c = it->second / lg.coef;
    rem.erase(it);
    for (std::size_t k = 1; k < g.size(); ++k) {
      const Term& y = g.terms()[k];
      Monomial p = m * y.mono;
      auto [jt, inserted] = rem.try_emplace(p, 0);
      jt->second -= c * y.coef;
      if (jt->second == 0) rem.erase(jt);
    }
    qt.push_back({m, c});
  }
  q = Polynomial::from_terms(std::move(qt));
  return true;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  Polynomial q;
  if (!try_divide(f, g, q)) throw NotDivisible();
  return q;
}

mpq_class content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpq_class c(num, den);
  c.canonicalize();
  return c;
}

Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  mpq_class c = content(f);
  if (f.leading().coef < 0) c = -c;
  return f.scaled(1 / c);
}

namespace {

using Uni = std::vector<Polynomial>;  // coefficients by degree in the main variable

Uni to_uni(const Polynomial& f, int v) {
  Uni u(f.degree_in(v) + 1);
  std::vector<std::vector<Term>> parts(u.size());
  for (const auto& t : f.terms()) {
    Term s = t;
    int e = s.mono.exp[v];
    s.mono.exp[v] = 0;
    s.mono.deg = std::uint16_t(s.mono.deg - e);
    parts[e].push_back(std::move(s));
  }
  for (std::size_t e = 0; e < u.size(); ++e) u[e] = Polynomial::from_terms(std::move(parts[e]));
  return u;
}

Polynomial from_uni(const Uni& u, int v) {
  std::vector<Term> t;
  for (std::size_t e = 0; e < u.size(); ++e)
    for (const auto& x : u[e].terms()) {
      Term s = x;
      s.mono.exp[v] = std::uint8_t(s.mono.exp[v] + e);
      s.mono.deg = std::uint16_t(s.mono.deg + e);
      t.push_back(std::move(s));
    }
  return Polynomial::from_terms(std::move(t));
}

void trim(Uni& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Polynomial uni_content(const Uni& u) {
  std::vector<const Polynomial*> cs;
  for (const auto& c : u)
    if (!c.is_zero()) cs.push_back(&c);
  std::sort(cs.begin(), cs.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  Polynomial g;
  for (auto* c : cs) {
    g = gcd(g, *c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Uni uni_divide(const Uni& u, const Polynomial& c) {
  Uni r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = exact_divide(u[i], c);
  return r;
}

// Pseudo-remainder of a by b (deg a >= deg b), up to a nonzero factor.
Uni prem(Uni a, const Uni& b) {
  const Polynomial& lb = b.back();
  std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Polynomial la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  if (f.is_constant() || g.is_constant()) return Polynomial(1);
  std::vector<int> vf = f.variables(), vg = g.variables();
  int v = std::min(vf.front(), vg.front());
  if (f.degree_in(v) == 0) return gcd(f, uni_content(to_uni(g, v)));
  if (g.degree_in(v) == 0) return gcd(uni_content(to_uni(f, v)), g);

  Uni a = to_uni(f, v), b = to_uni(g, v);
  Polynomial ca = uni_content(a), cb = uni_content(b);
  Polynomial c = gcd(ca, cb);
  a = uni_divide(a, ca);
  b = uni_divide(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  Uni last;
  for (;;) {
    Uni r = prem(a, b);
    if (r.empty()) {
      last = b;
      break;
    }
    if (r.size() == 1) {
      last = {Polynomial(1)};
      break;
    }
    a = std::move(b);
    b = uni_divide(r, uni_content(r));
  }
  Polynomial pp = from_uni(uni_divide(last, uni_content(last)), v);
  return normalize(c * pp);
}

}  // namespace bdc
