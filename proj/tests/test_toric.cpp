#include "bdcluster/toric.hpp"

#include <doctest.h>

#include <set>

using namespace bdc;

namespace {

std::vector<int> row_degrees(const Monomial& m, int N) {
  std::vector<int> v(N, 0);
  for (int r = 1; r <= N; ++r)
    for (int c = 1; c <= N; ++c) v[r - 1] += m.exp[Variable{r, c}.index()];
  return v;
}

}  // namespace

TEST_CASE("equivalence modulo the annihilator") {
  BDTriple t = make_triple(5, 2, 3);
  CHECK(is_trivial({0, 0, 0, 0, 0}, t));
  CHECK(is_trivial({1, 1, 1, 1, 1}, t));
  CHECK(is_trivial({0, 1, -2, 1, 0}, t));  // B_row
  CHECK(is_trivial({2, 3, 0, 3, 2}, t));    // 2 * ones + B_row
  CHECK_FALSE(is_trivial({1, 0, 0, 0, 0}, t));
  CHECK_FALSE(is_trivial({0, 1, 1, 1, 1}, t));
  CHECK(equivalent({0, 1, 1, 1, 1}, {1, 2, 2, 2, 2}, t));
}

TEST_CASE("weights of plain minors") {
  BDTriple t = make_triple(5, 2, 3);
  for (int i = 1; i <= 5; ++i) {
    auto w = weight_of(f(5, i, i), Side::Left, t);
    REQUIRE(w);
    std::vector<int> want(5, 0);
    for (int k = i; k <= 5; ++k) want[k - 1] = 1;
    CHECK(w->rep == want);
  }
  CHECK_FALSE(weight_of(Polynomial::var(1, 1) + Polynomial::var(2, 2), Side::Left, t));
  CHECK_THROWS(weight_of(Polynomial(), Side::Left, t));
}

TEST_CASE("glued row function mixes rows beta, alpha+1 with beta+1, alpha") {
  BDTriple t = make_triple(5, 2, 3);
  Seed s = build_initial_seed(t);
  const Polynomial& psi = s.at({3, 5});
  auto w = weight_of(psi, Side::Left, t);
  REQUIRE(w);
  std::set<std::vector<int>> families;
  for (const auto& term : psi.terms()) families.insert(row_degrees(term.mono, 5));
  REQUIRE(families.size() == 2);
  std::vector<int> a = *families.begin(), b = *families.rbegin(), diff(5);
  for (int i = 0; i < 5; ++i) diff[i] = a[i] - b[i];
  std::vector<int> B = cartan_data(t).B_row;
  std::vector<int> negB(5);
  for (int i = 0; i < 5; ++i) negB[i] = -B[i];
  CHECK((diff == B || diff == negB));
}

TEST_CASE("same-diagonal plain minors differ by a row indicator") {
  BDTriple t = make_triple(6, 2, 4);
  Seed s = build_initial_seed(t);
  for (int i = 2; i <= 6; ++i)
    for (int j = 2; j <= 6; ++j)
      for (int k = 1; i + k <= 6 && j + k <= 6; ++k) {
        if (minor_spec(t, i, j).kind != MinorKind::Plain || minor_spec(t, i + k, j + k).kind != MinorKind::Plain) continue;
        auto a = weight_of(s.at({i, j}), Side::Left, t), b = weight_of(s.at({i + k, j + k}), Side::Left, t);
        REQUIRE(a);
        REQUIRE(b);
        std::vector<int> d(6, 0);
        for (int r = 0; r < 6; ++r) d[r] = a->rep[r] - b->rep[r];
        std::vector<int> want(6, 0);
        for (int r = i; r <= i + k - 1; ++r) want[r - 1] = 1;
        CHECK(d == want);
      }
}

TEST_CASE("every initial function is equivariant") {
  for (int N = 3; N <= 6; ++N)
    for (const auto& t : canonical_triples(N)) {
      Seed s = build_initial_seed(t);
      for (int id : s.quiver.alive())
        for (Side side : {Side::Left, Side::Right}) CHECK(weight_of(s.fn[id], side, t).has_value());
    }
}

TEST_CASE("span condition") {
  Seed s = build_initial_seed(make_triple(4, 1, 2));
  auto w = weight_of(s.at({4, 4}), Side::Left, s.triple);
  REQUIRE(w);
  CHECK_FALSE(span_check({*w}, s.triple));
  CHECK(span_dimension({*w}, s.triple) == 1);
}

TEST_CASE("balance at vertex (5,5) of 5:2->3") {
  BDTriple t = make_triple(5, 2, 3);
  Seed s = build_initial_seed(t);
  // in-neighbours (4,5), (5,4); out-neighbour (4,4)
  auto eta = [&](Pos p) { return weight_of(s.at(p), Side::Left, t)->rep; };
  std::vector<int> a = eta({4, 5}), b = eta({5, 4}), c = eta({4, 4}), sum(5);
  for (int i = 0; i < 5; ++i) sum[i] = a[i] + b[i];
  CHECK(equivalent(sum, c, t));
}

TEST_CASE("toric action on all initial seeds") {
  for (int N = 3; N <= 5; ++N)
    for (const auto& t : canonical_triples(N)) {
      CAPTURE(t.str());
      ToricReport r = toric_check(build_initial_seed(t));
      CHECK(r.equivariant);
      CHECK(r.span_left == N - 2);
      CHECK(r.span_right == N - 2);
      CHECK(r.violations.empty());
      CHECK(r.ok(N));
    }
}

TEST_CASE("balance detects a broken arrow") {
  Seed s = build_initial_seed(make_triple(5, 2, 3));
  s.quiver.add_arrow(s.id({3, 3}), s.id({2, 4}));
  CHECK_FALSE(toric_check(s).violations.empty());
}
