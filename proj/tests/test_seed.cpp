#include "bdcluster/seed.hpp"

#include <doctest.h>

#include <set>

using namespace bdc;

namespace {

Polynomial x(int r, int c) { return Polynomial::var(r, c); }

// Builds a matrix from a grid of (row, col) pairs; (0,0) is a zero entry.
PolyMatrix grid(const std::vector<std::vector<std::pair<int, int>>>& g) {
  PolyMatrix m(int(g.size()), int(g[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (g[i][j].first) m.at(i, j) = x(g[i][j].first, g[i][j].second);
  return m;
}

bool same_matrix(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

std::set<std::pair<Pos, Pos>> arrows(const Quiver& q, bool nonstandard_only) {
  std::set<std::pair<Pos, Pos>> r;
  for (int u : q.visible())
    for (int v : q.visible())
      if (q.b(u, v) > 0 && (!nonstandard_only || !q.has_standard_displacement(u, v)))
        r.insert({q.info(u).pos, q.info(v).pos});
  return r;
}

}  // namespace

TEST_CASE("plain minor specs") {
  BDTriple t = make_triple(5, 2, 3);
  MinorSpec s = minor_spec(t, 3, 3);
  CHECK(s.kind == MinorKind::Plain);
  CHECK(s.rows() == std::vector<int>{3, 4, 5});
  CHECK(s.cols() == std::vector<int>{3, 4, 5});
  MinorSpec u = minor_spec(t, 2, 3);
  CHECK(u.kind == MinorKind::Plain);
  CHECK(u.rows() == std::vector<int>{2, 3, 4});
  CHECK(u.cols() == std::vector<int>{3, 4, 5});
  CHECK(realize(plain_spec(5, 5, 5)) == x(5, 5));
}

TEST_CASE("glued minor specs") {
  BDTriple t = make_triple(5, 2, 3);
  MinorSpec col = minor_spec(t, 5, 2);
  CHECK(col.kind == MinorKind::GluedCol);
  CHECK(same_matrix(realize_matrix(col), grid({{{5, 2}, {5, 3}, {0, 0}}, {{1, 3}, {1, 4}, {1, 5}}, {{2, 3}, {2, 4}, {2, 5}}})));

  MinorSpec row = minor_spec(t, 3, 5);
  CHECK(row.kind == MinorKind::GluedRow);
  CHECK(same_matrix(realize_matrix(row), grid({{{3, 5}, {2, 1}, {2, 2}, {2, 3}},
                                               {{4, 5}, {3, 1}, {3, 2}, {3, 3}},
                                               {{0, 0}, {4, 1}, {4, 2}, {4, 3}},
                                               {{0, 0}, {5, 1}, {5, 2}, {5, 3}}})));

  // glued exactly on the two index lines
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      MinorKind k = minor_spec(t, i, j).kind;
      bool col_line = j <= 2 && i == 5 + j - 2;
      bool row_line = i <= 3 && j == 5 + i - 3;
      CHECK((k == MinorKind::GluedCol) == col_line);
      CHECK((k == MinorKind::GluedRow) == row_line);
    }
}

TEST_CASE("decorations") {
  CHECK(f(5, 2, 1) == determinant(PolyMatrix::of_variables({2, 3, 4, 5}, {1, 2, 3, 4})));
  CHECK(f(5, 2, 1, {Decoration::up()}) == determinant(PolyMatrix::of_variables({1, 3, 4, 5}, {1, 2, 3, 4})));
  CHECK(f(5, 2, 2, {Decoration::trunc(1)}) == determinant(PolyMatrix::of_variables({2, 3, 4}, {2, 3, 4})));
  CHECK(f(5, 2, 4, {Decoration::left()}) == determinant(PolyMatrix::of_variables({2, 3}, {3, 5})));
  CHECK_THROWS_AS(f(5, 5, 5, {Decoration::trunc(2)}), ShapeMismatch);
}

TEST_CASE("initial seed of 5:2->3") {
  Seed s = build_initial_seed(make_triple(5, 2, 3));
  const Quiver& q = s.quiver;
  CHECK(q.visible().size() == 24);
  CHECK(q.frozen_ids().size() == 6);
  std::set<std::pair<Pos, Pos>> want{{{2, 1}, {3, 1}}, {{1, 3}, {1, 4}}, {{5, 3}, {1, 4}},
                                     {{1, 4}, {5, 2}}, {{4, 5}, {3, 1}}, {{3, 1}, {3, 5}}};
  CHECK(arrows(q, true) == want);
  CHECK_FALSE(q.info(*q.at({3, 1})).frozen);
  CHECK_FALSE(q.info(*q.at({1, 4})).frozen);
  for (int u : q.frozen_ids())
    for (int v : q.frozen_ids()) CHECK(q.b(u, v) == 0);
  for (int id : q.visible()) {
    CHECK_FALSE(s.fn[id].is_zero());
    CHECK(s.fn[id].is_homogeneous());
  }
  CHECK(s.at({5, 2}) == determinant(realize_matrix(minor_spec(s.triple, 5, 2))));
}

TEST_CASE("seed shape for every canonical triple") {
  for (int N = 3; N <= 6; ++N)
    for (const auto& t : canonical_triples(N)) {
      Seed s = build_initial_seed(t);
      CAPTURE(t.str());
      CHECK(int(s.quiver.visible().size()) == N * N - 1);
      CHECK(int(s.quiver.frozen_ids().size()) == 2 * (N - 2));
      CHECK(rank_check(s.quiver) == N * N - 1 - 2 * (N - 2));
      CHECK(nonconstancy_check(s));
      // plain functions have degree equal to the size of the maximal contiguous block
      for (int id : s.quiver.visible()) {
        Pos p = s.quiver.info(id).pos;
        if (minor_spec(t, p.r, p.c).kind != MinorKind::Plain) continue;
        CHECK(s.fn[id].total_degree() == N - std::max(p.r, p.c) + 1);
      }
    }
  Seed three = build_initial_seed(make_triple(3, 1, 2));
  CHECK(rank_check(three.quiver) == 6);
}

TEST_CASE("standard quiver baseline") {
  Quiver q = standard_quiver(3);
  CHECK(q.mutable_ids().size() == 4);
  CHECK(rank_check(q) == 4);
}

TEST_CASE("nonconstancy negative control") {
  Seed s = build_initial_seed(make_triple(4, 1, 3));
  CHECK(nonconstancy_check(s));
  s.fn[s.quiver.frozen_ids().front()] = Polynomial(3);
  CHECK_FALSE(nonconstancy_check(s));
}

TEST_CASE("explicit quiver isomorphism") {
  Seed s = build_initial_seed(make_triple(4, 1, 2));
  std::map<int, int> ident;
  for (int id : s.quiver.alive()) ident[id] = id;
  CHECK(quiver_isomorphic(s.quiver, s.quiver, ident));
  Quiver std4 = standard_quiver(4);
  std::map<int, int> by_pos;
  for (int id : std4.alive()) by_pos[id] = *s.quiver.at(std4.info(id).pos);
  CHECK_FALSE(quiver_isomorphic(std4, s.quiver, by_pos));
}

TEST_CASE("DOT export") {
  Seed s = build_initial_seed(make_triple(5, 2, 3));
  std::string dot = to_dot(s.quiver);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count("shape=") == 24);
  CHECK(count("shape=box") == 6);
  CHECK(count("shape=circle") == 18);
  CHECK(count("style=dashed") == 6);
  CHECK(count("v_1_1") == 0);
  CHECK(dot.find("v_5_3 -> v_1_4 [style=dashed];") != std::string::npos);
  CHECK(to_dot(build_initial_seed(make_triple(5, 2, 3)).quiver) == dot);
}
