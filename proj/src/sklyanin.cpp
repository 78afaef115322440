#include "bdcluster/sklyanin.hpp"

namespace bdc {

QMatrix casimir_cartan(int N) {
  QMatrix t(N, QVector(N));
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) t[k][l] = mpq_class(k == l ? 1 : 0) - mpq_class(1, N);
  return t;
}

namespace {

struct System {
  QMatrix a;
  QVector b;
  int n = 0;
  void row(std::vector<std::pair<int, int>> terms, const mpq_class& rhs) {
    QVector r(n);
    for (auto [idx, c] : terms) r[idx] += c;
    a.push_back(std::move(r));
    b.push_back(rhs);
  }
};

// Rows for zero row/column sums, the symmetric part, and the gamma condition.
System r0_system(const BDTriple& t) {
  const int N = t.N;
  System s;
  s.n = N * N;
  auto at = [N](int k, int l) { return k * N + l; };
  QMatrix t0 = casimir_cartan(N);
  for (int k = 0; k < N; ++k) {
    std::vector<std::pair<int, int>> row, col;
    for (int l = 0; l < N; ++l) {
      row.push_back({at(k, l), 1});
      col.push_back({at(l, k), 1});
    }
    s.row(row, 0);
    s.row(col, 0);
  }
  for (int k = 0; k < N; ++k)
    for (int l = k; l < N; ++l) s.row({{at(k, l), 1}, {at(l, k), 1}}, t0[k][l]);
  const int a = t.alpha - 1, b = t.beta - 1;
  for (int m = 0; m < N; ++m)
    s.row({{at(b, m), 1}, {at(b + 1, m), -1}, {at(m, a), 1}, {at(m, a + 1), -1}}, 0);
  return s;
}

QMatrix unflatten(const QVector& v, int N) {
  QMatrix r(N, QVector(N));
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) r[k][l] = v[k * N + l];
  return r;
}

}  // namespace

R0Solution solve_r0(const BDTriple& t) {
  System s = r0_system(t);
  auto p = solve_particular(s.a, s.b, s.n);
  if (!p) throw Inconsistent("r0 system has no solution for " + t.str());
  R0Solution r;
  r.particular = unflatten(*p, t.N);
  for (const auto& v : null_space(s.a, s.n)) r.homogeneous.push_back(unflatten(v, t.N));
  return r;
}

QMatrix r0_combination(const R0Solution& s, const std::vector<mpq_class>& c) {
  QMatrix r = s.particular;
  for (std::size_t i = 0; i < c.size() && i < s.homogeneous.size(); ++i)
    for (std::size_t k = 0; k < r.size(); ++k)
      for (std::size_t l = 0; l < r.size(); ++l) r[k][l] += c[i] * s.homogeneous[i][k][l];
  return r;
}

bool r0_conditions_hold(const BDTriple& t, const QMatrix& r0) {
  System s = r0_system(t);
  QVector v(s.n);
  for (int k = 0; k < t.N; ++k)
    for (int l = 0; l < t.N; ++l) v[k * t.N + l] = r0[k][l];
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    mpq_class acc = 0;
    for (int j = 0; j < s.n; ++j) acc += s.a[i][j] * v[j];
    if (acc != s.b[i]) return false;
  }
  return true;
}

namespace {

void add(RMatrix& r, int i, int j, int k, int l, const mpq_class& c) {
  if (c == 0) return;
  mpq_class& x = r.coef[{i, j, k, l}];
  x += c;
  if (x == 0) r.coef.erase({i, j, k, l});
}

RMatrix base_part(int N, const QMatrix& r0) {
  RMatrix r;
  r.N = N;
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) add(r, k, k, l, l, r0[k - 1][l - 1]);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) add(r, j, i, i, j, 1);
  return r;
}

}  // namespace

RMatrix bd_r_matrix(const BDTriple& t, const QMatrix& r0) {
  RMatrix r = base_part(t.N, r0);
  const int a = t.alpha, b = t.beta;
  // E_{-alpha} ^ E_{beta}
  add(r, a + 1, a, b, b + 1, 1);
  add(r, b, b + 1, a + 1, a, -1);
  return r;
}

RMatrix standard_r_matrix(int N) {
  QMatrix half = casimir_cartan(N);
  for (auto& row : half)
    for (auto& x : row) x /= 2;
  return base_part(N, half);
}

RMatrix flip(const RMatrix& r) {
  RMatrix f;
  f.N = r.N;
  for (const auto& [k, c] : r.coef) f.coef[{k[2], k[3], k[0], k[1]}] = c;
  return f;
}

bool splits_casimir(const RMatrix& r) {
  RMatrix sum = r;
  for (const auto& [k, c] : flip(r).coef) add(sum, k[0], k[1], k[2], k[3], c);
  RMatrix t;
  t.N = r.N;
  QMatrix t0 = casimir_cartan(r.N);
  for (int i = 1; i <= r.N; ++i)
    for (int j = 1; j <= r.N; ++j) {
      if (i != j) add(t, i, j, j, i, 1);
      add(t, i, i, j, j, t0[i - 1][j - 1]);
    }
  return sum.coef == t.coef;
}

namespace {

// Left and right derivations of f along every e_pq, indexed p*N+q (0-based).
struct Derivs {
  std::vector<Polynomial> left, right;
};

Derivs derivations(const Polynomial& f, int N) {
  std::vector<Polynomial> d(std::size_t(N) * N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) d[u * N + v] = f.derivative({u + 1, v + 1});
  Derivs r;
  r.left.resize(std::size_t(N) * N);
  r.right.resize(std::size_t(N) * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      Polynomial l, rt;
      for (int i = 0; i < N; ++i) {
        // (X e_pq)_iq = x_ip ; (e_pq X)_pj = x_qj
        if (!d[i * N + q].is_zero()) l += Polynomial::var(i + 1, p + 1) * d[i * N + q];
        if (!d[p * N + i].is_zero()) rt += Polynomial::var(q + 1, i + 1) * d[p * N + i];
      }
      r.left[p * N + q] = std::move(l);
      r.right[p * N + q] = std::move(rt);
    }
  return r;
}

}  // namespace

Polynomial bracket(const Polynomial& f, const Polynomial& g, const RMatrix& r) {
  const int N = r.N;
  Derivs df = derivations(f, N), dg = derivations(g, N);
  Polynomial acc;
  for (const auto& [k, c] : r.coef) {
    int a = (k[0] - 1) * N + (k[1] - 1), b = (k[2] - 1) * N + (k[3] - 1);
    Polynomial term = df.left[a] * dg.left[b] - df.right[a] * dg.right[b];
    if (!term.is_zero()) acc += term.scaled(c);
  }
  return acc;
}

BracketTable entry_bracket_table(const RMatrix& r) {
  BracketTable tbl;
  for (int i = 1; i <= r.N; ++i)
    for (int j = 1; j <= r.N; ++j)
      for (int k = 1; k <= r.N; ++k)
        for (int l = 1; l <= r.N; ++l) {
          Variable u{i, j}, v{k, l};
          tbl[{u.index(), v.index()}] = bracket(Polynomial::var(u), Polynomial::var(v), r);
        }
  return tbl;
}

Polynomial bracket(const Polynomial& f, const Polynomial& g, const BracketTable& tbl) {
  Polynomial acc;
  for (int u : f.variables()) {
    Polynomial du = f.derivative(Variable::from_index(u));
    for (int v : g.variables()) {
      auto it = tbl.find({u, v});
      if (it == tbl.end() || it->second.is_zero()) continue;
      acc += du * g.derivative(Variable::from_index(v)) * it->second;
    }
  }
  return acc;
}

std::optional<mpq_class> log_canonical_coefficient(const Polynomial& f, const Polynomial& g, const RMatrix& r) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("log-canonical coefficient of zero");
  Polynomial h = bracket(f, g, r);
  if (h.is_zero()) return mpq_class(0);
  Polynomial fg = f * g;
  if (!(h.leading().mono == fg.leading().mono)) return std::nullopt;
  mpq_class w = h.leading().coef / fg.leading().coef;
  if (!(h == fg.scaled(w))) return std::nullopt;
  return w;
}

CompatResult check_compatibility(const Seed& s, const RMatrix& r) {
  const Quiver& q = s.quiver;
  CompatResult res;
  std::vector<int> mut = q.mutable_ids();
  res.order = mut;
  for (int id : q.alive())
    if (q.info(id).frozen) res.order.push_back(id);
  const std::size_t n = res.order.size();
  res.omega.assign(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = log_canonical_coefficient(s.fn[res.order[i]], s.fn[res.order[j]], r);
      if (!w) {
        res.failure = "not log-canonical: " + q.info(res.order[i]).pos.str() + ", " + q.info(res.order[j]).pos.str();
        return res;
      }
      res.omega[i][j] = *w;
      res.omega[j][i] = -*w;
    }
  for (std::size_t k = 0; k < mut.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class acc = 0;
      for (std::size_t l = 0; l < n; ++l) {
        int b = q.b(mut[k], res.order[l]);
        if (b) acc += b * res.omega[l][j];
      }
      if (j == k) {
        if (acc == 0) {
          res.failure = "zero diagonal entry at " + q.info(mut[k]).pos.str();
          return res;
        }
        res.D.push_back(acc);
      } else if (acc != 0) {
        res.failure = "nonzero entry " + acc.get_str() + " at row " + q.info(mut[k]).pos.str() + ", column " +
                      q.info(res.order[j]).pos.str();
        res.D.clear();
        return res;
      }
    }
  res.ok = true;
  return res;
}

std::vector<std::vector<mpq_class>> sample_r0_coefficients(std::size_t dim, int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::vector<mpq_class>> out;
  for (int s = 0; s < samples; ++s) {
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < dim; ++i) c.push_back(int(rng() % 7) - 3);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bdc
