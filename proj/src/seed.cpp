#include "bdcluster/seed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bdc {

namespace {

std::vector<int> range(int a, int b) {
  std::vector<int> r;
  for (int k = a; k <= b; ++k) r.push_back(k);
  return r;
}

void check_bounds(const std::vector<int>& v, int N) {
  for (int x : v)
    if (x < 1 || x > N) throw ShapeMismatch("decorated index leaves the matrix");
}

}  // namespace

MinorSpec plain_spec(int N, int i, int j) {
  if (i < 1 || i > N || j < 1 || j > N) throw ShapeMismatch("anchor outside the matrix");
  if (j > i) return plain_spec(N, range(i, N - j + i), range(j, N));
  return plain_spec(N, range(i, N), range(j, N - i + j));
}

MinorSpec plain_spec(int N, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw ShapeMismatch("plain minor must be square");
  MinorSpec s;
  s.N = N;
  s.anchor = rows.empty() ? Pos{} : Pos{rows.front(), cols.front()};
  s.blocks = {Block{rows, cols, 0, 0}};
  s.size = int(rows.size());
  return s;
}

MinorSpec minor_spec(const BDTriple& t, int i, int j) {
  const int n = t.N, a = t.alpha, b = t.beta;
  MinorSpec s;
  // When N = 2*beta (resp. N = 2*alpha) the two glued families share a diagonal and
  // chain into a single three-block matrix.
  if (j >= 1 && j <= a && i == n + j - a) {
    s.kind = MinorKind::GluedCol;
    if (n == 2 * b) {
      s.blocks = {Block{range(i, n), range(j, a + 1), 0, 0},
                  Block{range(1, b + 1), range(b, n), n - i + 1, a - j},
                  Block{range(a, n), range(1, n - a), n - i + b, a - j + n - b + 1}};
      s.size = b + n - j + 1;
    } else {
      s.blocks = {Block{range(i, n), range(j, a + 1), 0, 0},
                  Block{range(1, n - b), range(b, n), n - i + 1, a - j}};
      s.size = a - j + 1 + n - b;
    }
  } else if (i >= 1 && i <= b && j == n + i - b) {
    s.kind = MinorKind::GluedRow;
    if (n == 2 * a) {
      s.blocks = {Block{range(i, b + 1), range(j, n), 0, 0},
                  Block{range(a, n), range(1, a + 1), b - i, n - j + 1},
                  Block{range(1, n - b), range(b, n), b - i + n - a + 1, n - j + a}};
      s.size = 2 * n - a - i + 1;
    } else {
      s.blocks = {Block{range(i, b + 1), range(j, n), 0, 0},
                  Block{range(a, n), range(1, n - a), b - i, n - j + 1}};
      s.size = b - i + 1 + n - a;
    }
  } else {
    s = plain_spec(n, i, j);
  }
  s.N = n;
  s.alpha = a;
  s.beta = b;
  s.anchor = {i, j};
  return s;
}

MinorSpec decorate(const MinorSpec& s, const std::vector<Decoration>& d) {
  MinorSpec r = s;
  for (const auto& x : d) {
    if (r.kind != MinorKind::Plain) {
      if (x.tag != DecoTag::Trunc) {
        r.edits.push_back(x.tag);
        continue;
      }
      if (!r.edits.empty()) throw ShapeMismatch("truncate a glued minor before shifting its lines");
      if (x.m < 0 || r.trunc + x.m > r.size) throw ShapeMismatch("truncation larger than the matrix");
      r.trunc += x.m;
      continue;
    }
    auto& rows = r.blocks.front().rows;
    auto& cols = r.blocks.front().cols;
    if (rows.empty()) throw ShapeMismatch("decoration of an empty minor");
    switch (x.tag) {
      case DecoTag::Right: cols.back() += 1; break;
      case DecoTag::Left: cols.front() -= 1; break;
      case DecoTag::Up: rows.front() -= 1; break;
      case DecoTag::Down: rows.back() += 1; break;
      case DecoTag::Trunc:
        if (x.m < 0 || x.m > int(rows.size())) throw ShapeMismatch("truncation larger than the matrix");
        rows.resize(rows.size() - x.m);
        cols.resize(cols.size() - x.m);
        r.size -= x.m;
        break;
    }
    check_bounds(rows, r.N);
    check_bounds(cols, r.N);
  }
  return r;
}

PolyMatrix realize_matrix(const MinorSpec& s) {
  const int k = s.size - s.trunc;
  // X row and column of every entry; row 0 marks a structural zero
  std::vector<std::vector<Pos>> cell(s.size, std::vector<Pos>(s.size));
  for (const auto& bl : s.blocks)
    for (std::size_t i = 0; i < bl.rows.size(); ++i)
      for (std::size_t j = 0; j < bl.cols.size(); ++j) cell[bl.row_off + i][bl.col_off + j] = {bl.rows[i], bl.cols[j]};
  for (DecoTag e : s.edits)
    for (int t = 0; t < k; ++t) {
      Pos* c = nullptr;
      int dr = 0, dc = 0;
      switch (e) {
        case DecoTag::Right: c = &cell[t][k - 1], dc = 1; break;
        case DecoTag::Left: c = &cell[t][0], dc = -1; break;
        case DecoTag::Up: c = &cell[0][t], dr = -1; break;
        case DecoTag::Down: c = &cell[k - 1][t], dr = 1; break;
        case DecoTag::Trunc: break;
      }
      if (!c || c->r == 0) continue;
      c->r += dr;
      c->c += dc;
      if (c->r < 1 || c->r > s.N || c->c < 1 || c->c > s.N) throw ShapeMismatch("decorated index leaves the matrix");
    }
  PolyMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (cell[i][j].r != 0) m.at(i, j) = Polynomial::var(cell[i][j].r, cell[i][j].c);
  return m;
}

Polynomial realize(const MinorSpec& s, const std::vector<Decoration>& d) {
  return determinant(realize_matrix(decorate(s, d)));
}

Polynomial f(int N, int i, int j, const std::vector<Decoration>& d) { return realize(plain_spec(N, i, j), d); }

Polynomial glue_col_form(const BDTriple& t, const MinorSpec& base, int m) {
  const int n = t.N;
  auto tr = Decoration::trunc(m);
  return realize(base, {tr}) * f(n, 1, t.beta + 1) -
         realize(base, {tr, Decoration::right()}) * f(n, 1, t.beta + 1, {Decoration::left()});
}

Polynomial glue_col_form(const BDTriple& t, int i, int j, int m) { return glue_col_form(t, plain_spec(t.N, i, j), m); }

Polynomial glue_row_form(const BDTriple& t, const MinorSpec& base, int m) {
  const int n = t.N;
  auto tr = Decoration::trunc(m);
  return realize(base, {tr}) * f(n, t.alpha + 1, 1) -
         realize(base, {tr, Decoration::down()}) * f(n, t.alpha + 1, 1, {Decoration::up()});
}

Polynomial glue_row_form(const BDTriple& t, int i, int j, int m) { return glue_row_form(t, plain_spec(t.N, i, j), m); }

int Quiver::add_vertex(Pos p, bool frozen, bool aux) {
  if (pos_.count(p)) throw std::logic_error("position already occupied: " + p.str());
  int id = int(v_.size());
  std::size_t old = v_.size();
  v_.push_back({p, p, 0, frozen || aux, true, aux});
  std::vector<int> nb((old + 1) * (old + 1), 0);
  for (std::size_t u = 0; u < old; ++u)
    for (std::size_t w = 0; w < old; ++w) nb[u * (old + 1) + w] = b_[u * old + w];
  b_ = std::move(nb);
  pos_[p] = id;
  return id;
}

std::vector<int> Quiver::alive() const {
  std::vector<int> r;
  for (const auto& [p, id] : pos_) r.push_back(id);
  return r;
}

std::vector<int> Quiver::visible() const {
  std::vector<int> r;
  for (const auto& [p, id] : pos_)
    if (!v_[id].aux) r.push_back(id);
  return r;
}

std::vector<int> Quiver::mutable_ids() const {
  std::vector<int> r;
  for (const auto& [p, id] : pos_)
    if (!v_[id].frozen) r.push_back(id);
  return r;
}

std::vector<int> Quiver::frozen_ids() const {
  std::vector<int> r;
  for (const auto& [p, id] : pos_)
    if (v_[id].frozen && !v_[id].aux) r.push_back(id);
  return r;
}

std::optional<int> Quiver::at(Pos p) const {
  auto it = pos_.find(p);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

void Quiver::set(int u, int v, int w) {
  b_[std::size_t(u) * v_.size() + v] = w;
  b_[std::size_t(v) * v_.size() + u] = -w;
}

std::vector<int> Quiver::neighbors(int u) const {
  std::vector<int> r;
  for (int id : alive())
    if (b(u, id) != 0) r.push_back(id);
  return r;
}

void Quiver::freeze(int id) {
  v_[id].frozen = true;
  drop_frozen_arrows();
}

void Quiver::unfreeze(int id) {
  if (v_[id].aux) throw std::logic_error("the auxiliary vertex stays frozen");
  v_[id].frozen = false;
}

void Quiver::remove(int id) {
  for (std::size_t w = 0; w < v_.size(); ++w)
    if (b(id, int(w)) != 0) set(id, int(w), 0);
  pos_.erase(v_[id].pos);
  v_[id].alive = false;
}

void Quiver::relocate(const std::vector<std::pair<int, Pos>>& moves) {
  for (const auto& [id, p] : moves) pos_.erase(v_[id].pos);
  for (const auto& [id, p] : moves) {
    if (pos_.count(p)) throw std::logic_error("relocation target occupied: " + p.str());
    pos_[p] = id;
    v_[id].pos = p;
    v_[id].gen++;
  }
}

void Quiver::drop_frozen_arrows() {
  for (std::size_t u = 0; u < v_.size(); ++u)
    for (std::size_t w = u + 1; w < v_.size(); ++w)
      if (v_[u].frozen && v_[w].frozen && b(int(u), int(w)) != 0) set(int(u), int(w), 0);
}

bool Quiver::has_standard_displacement(int u, int v) const {
  Pos a = v_[u].pos, c = v_[v].pos;
  int dr = c.r - a.r, dc = c.c - a.c;
  bool disp = (dr == 1 && dc == 0) || (dr == 0 && dc == 1) || (dr == -1 && dc == -1);
  bool both_boundary = (a.r == 1 || a.c == 1) && (c.r == 1 || c.c == 1);
  return disp && !both_boundary;
}

const Polynomial& Seed::at(Pos p) const { return fn[id(p)]; }

int Seed::id(Pos p) const {
  auto i = quiver.at(p);
  if (!i) throw std::out_of_range("no vertex at " + p.str());
  return *i;
}

namespace {

Quiver grid_quiver(int N) {
  Quiver q(N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) q.add_vertex({i, j}, i == 1 || j == 1, i == 1 && j == 1);
  auto arrow = [&](Pos a, Pos c) {
    auto u = q.at(a), v = q.at(c);
    if (u && v && q.b(*u, *v) == 0) q.add_arrow(*u, *v);
  };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i != N) arrow({i, j}, {i + 1, j});
      if (j != N) arrow({i, j}, {i, j + 1});
      if (i != 1 && j != 1) arrow({i, j}, {i - 1, j - 1});
    }
  q.drop_frozen_arrows();
  return q;
}

}  // namespace

Quiver standard_quiver(int N) { return grid_quiver(N); }

Seed build_initial_seed(const BDTriple& t) {
  const int n = t.N, a = t.alpha, b = t.beta;
  Seed s;
  s.triple = t;
  s.quiver = grid_quiver(n);
  Quiver& q = s.quiver;
  q.unfreeze(*q.at({a + 1, 1}));
  q.unfreeze(*q.at({1, b + 1}));
  auto arrow = [&](Pos x, Pos y) {
    int u = *q.at(x), v = *q.at(y);
    if (q.b(u, v) == 0) q.add_arrow(u, v);
  };
  arrow({a, 1}, {a + 1, 1});
  arrow({1, b}, {1, b + 1});
  arrow({n, a + 1}, {1, b + 1});
  arrow({1, b + 1}, {n, a});
  arrow({b + 1, n}, {a + 1, 1});
  arrow({a + 1, 1}, {b, n});
  q.drop_frozen_arrows();
  s.fn.resize(q.capacity());
  for (int id : q.alive()) {
    Pos p = q.info(id).pos;
    s.fn[id] = realize(minor_spec(t, p.r, p.c));
  }
  return s;
}

int rank_check(const Quiver& q) {
  std::vector<int> all = q.visible(), mut = q.mutable_ids();
  QMatrix m;
  for (int u : mut) {
    QVector row;
    for (int v : all) row.push_back(q.b(u, v));
    m.push_back(std::move(row));
  }
  return rank(m);
}

bool nonconstancy_check(const Seed& s) {
  for (int id : s.quiver.frozen_ids())
    if (s.fn[id].is_constant()) return false;
  return true;
}

bool quiver_isomorphic(const Quiver& q1, const Quiver& q2, const std::map<int, int>& relabel) {
  std::set<int> image;
  for (const auto& [u, v] : relabel) {
    if (u < 0 || std::size_t(u) >= q1.capacity() || v < 0 || std::size_t(v) >= q2.capacity()) return false;
    if (!q1.info(u).alive || !q2.info(v).alive) return false;
    if (!image.insert(v).second) return false;
    if (q1.info(u).frozen != q2.info(v).frozen) return false;
  }
  for (const auto& [u1, v1] : relabel)
    for (const auto& [u2, v2] : relabel) {
      // Arrows between two frozen vertices carry no information.
      if (q1.info(u1).frozen && q1.info(u2).frozen) continue;
      if (q1.b(u1, u2) != q2.b(v1, v2)) return false;
    }
  return true;
}

std::string to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  auto label = [&](int id) {
    Pos p = q.info(id).pos;
    return "v_" + std::to_string(p.r) + "_" + std::to_string(p.c);
  };
  os << "digraph " << name << " {\n";
  std::vector<int> ids = q.visible();
  for (int id : ids) {
    Pos p = q.info(id).pos;
    os << "  " << label(id) << " [label=\"" << p.r << "," << p.c << "\", shape="
       << (q.info(id).frozen ? "box" : "circle") << "];\n";
  }
  for (int u : ids)
    for (int v : ids) {
      int w = q.b(u, v);
      if (w <= 0) continue;
      os << "  " << label(u) << " -> " << label(v);
      std::vector<std::string> attrs;
      if (w != 1) attrs.push_back("label=\"" + std::to_string(w) + "\"");
      if (!q.has_standard_displacement(u, v)) attrs.push_back("style=dashed");
      if (!attrs.empty()) {
        os << " [";
        for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
        os << "]";
      }
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace bdc
