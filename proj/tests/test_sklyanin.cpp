#include "bdcluster/sklyanin.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace bdc;

namespace {

Polynomial x(int r, int c) { return Polynomial::var(r, c); }

// {x_ij, x_kl} straight from the coordinate form of the derivations:
// (X e_pq)_ij = d_jq x_ip and (e_pq X)_ij = d_ip x_qj.
Polynomial coordinate_bracket(const RMatrix& r, int i, int j, int k, int l) {
  Polynomial acc;
  for (const auto& [key, c] : r.coef) {
    auto [p, q, u, v] = key;
    if (j == q && l == v) acc += (x(i, p) * x(k, u)).scaled(c);
    if (i == p && k == u) acc -= (x(q, j) * x(v, l)).scaled(c);
  }
  return acc;
}

Polynomial full_det(int N) {
  std::vector<int> idx;
  for (int i = 1; i <= N; ++i) idx.push_back(i);
  return determinant(PolyMatrix::of_variables(idx, idx));
}

// Re-checks the defining equations of r0 directly.
bool r0_valid(const BDTriple& t, const QMatrix& R) {
  const int N = t.N, a = t.alpha - 1, b = t.beta - 1;
  for (int k = 0; k < N; ++k) {
    mpq_class row = 0, col = 0;
    for (int l = 0; l < N; ++l) {
      row += R[k][l];
      col += R[l][k];
      mpq_class want = mpq_class(k == l ? 1 : 0) - mpq_class(1, N);
      if (R[k][l] + R[l][k] != want) return false;
    }
    if (row != 0 || col != 0) return false;
  }
  for (int m = 0; m < N; ++m)
    if (R[b][m] - R[b + 1][m] + R[m][a] - R[m][a + 1] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("r0 solutions") {
  for (int N = 3; N <= 6; ++N)
    for (const auto& t : canonical_triples(N)) {
      CAPTURE(t.str());
      R0Solution s = solve_r0(t);
      CHECK(r0_valid(t, s.particular));
      CHECK(r0_conditions_hold(t, s.particular));
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          mpq_class sym = (s.particular[k][l] + s.particular[l][k]) / 2;
          CHECK(sym == casimir_cartan(N)[k][l] / 2);
        }
      // the class has the dimension of the skew forms on h_T
      int kT = N - 2;
      CHECK(int(s.homogeneous.size()) == kT * (kT - 1) / 2);
      for (const auto& c : sample_r0_coefficients(s.homogeneous.size(), 3, 5))
        CHECK(r0_valid(t, r0_combination(s, c)));
    }
}

TEST_CASE("r0 class dimension is N-2" * doctest::should_fail()) {
  for (int N = 3; N <= 6; ++N)
    for (const auto& t : canonical_triples(N)) CHECK(int(solve_r0(t).homogeneous.size()) == N - 2);
}

TEST_CASE("r + r21 is the Casimir element") {
  CHECK(splits_casimir(standard_r_matrix(4)));
  for (int N = 3; N <= 5; ++N)
    for (const auto& t : canonical_triples(N)) CHECK(splits_casimir(bd_r_matrix(t, solve_r0(t).particular)));
  RMatrix broken = standard_r_matrix(3);
  broken.coef[{2, 1, 1, 2}] += 1;
  CHECK_FALSE(splits_casimir(broken));
}

TEST_CASE("coordinate bracket table") {
  BDTriple t = make_triple(3, 1, 2);
  RMatrix r = bd_r_matrix(t, solve_r0(t).particular);
  BracketTable tbl = entry_bracket_table(r);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          Polynomial b = tbl.at({Variable{i, j}.index(), Variable{k, l}.index()});
          CHECK(b == coordinate_bracket(r, i, j, k, l));
          CHECK(b == -tbl.at({Variable{k, l}.index(), Variable{i, j}.index()}));
          if (!b.is_zero()) CHECK(b.total_degree() == 2);
        }
}

TEST_CASE("Jacobi identity on coordinates") {
  BDTriple t = make_triple(3, 1, 2);
  BracketTable tbl = entry_bracket_table(bd_r_matrix(t, solve_r0(t).particular));
  std::mt19937 rng(21);
  for (int n = 0; n < 20; ++n) {
    auto v = [&] { return x(int(rng() % 3) + 1, int(rng() % 3) + 1); };
    Polynomial f = v(), g = v(), h = v();
    Polynomial jac = bracket(f, bracket(g, h, tbl), tbl) + bracket(g, bracket(h, f, tbl), tbl) +
                     bracket(h, bracket(f, g, tbl), tbl);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("determinant is a Casimir function") {
  for (int N = 3; N <= 4; ++N) {
    Polynomial d = full_det(N);
    for (const auto& t : canonical_triples(N)) {
      RMatrix r = bd_r_matrix(t, solve_r0(t).particular);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) CHECK(bracket(d, x(i, j), r).is_zero());
    }
  }
  BDTriple t = make_triple(3, 1, 2);
  RMatrix r = bd_r_matrix(t, solve_r0(t).particular);
  Seed s = build_initial_seed(t);
  for (int id : s.quiver.visible()) CHECK(bracket(full_det(3), s.fn[id], r).is_zero());
}

TEST_CASE("bracket is an antisymmetric biderivation") {
  BDTriple t = make_triple(3, 1, 2);
  RMatrix r = bd_r_matrix(t, solve_r0(t).particular);
  BracketTable tbl = entry_bracket_table(r);
  std::mt19937 rng(8);
  for (int n = 0; n < 10; ++n) {
    Polynomial f = testsupport::random_poly(rng, 3), g = testsupport::random_poly(rng, 3),
               h = testsupport::random_poly(rng, 3);
    CHECK(bracket(f, f, tbl).is_zero());
    CHECK(bracket(f, g * h, tbl) == g * bracket(f, h, tbl) + h * bracket(f, g, tbl));
    CHECK(bracket(f, g, r) == bracket(f, g, tbl));
    CHECK(bracket(f, g, r) == -bracket(g, f, r));
  }
}

TEST_CASE("log-canonical coefficients") {
  BDTriple t = make_triple(3, 1, 2);
  RMatrix r = bd_r_matrix(t, solve_r0(t).particular);
  Seed s = build_initial_seed(t);
  for (int u : s.quiver.alive())
    for (int v : s.quiver.alive()) {
      auto w = log_canonical_coefficient(s.fn[u], s.fn[v], r);
      CHECK(w.has_value());
      if (u == v && w) CHECK(*w == 0);
    }
  CHECK_FALSE(log_canonical_coefficient(x(1, 1), x(1, 1) + x(2, 2), standard_r_matrix(3)).has_value());
}

TEST_CASE("compatibility of the initial seed") {
  BDTriple t3 = make_triple(3, 1, 2);
  CompatResult c = check_compatibility(build_initial_seed(t3), bd_r_matrix(t3, solve_r0(t3).particular));
  CHECK(c.ok);
  CHECK(c.D.size() == 6);
  for (const auto& d : c.D) CHECK(d == -1);
  for (std::size_t i = 0; i < c.omega.size(); ++i)
    for (std::size_t j = 0; j < c.omega.size(); ++j) CHECK(c.omega[i][j] == -c.omega[j][i]);

  for (const auto& t : canonical_triples(4)) {
    CAPTURE(t.str());
    Seed s = build_initial_seed(t);
    R0Solution sol = solve_r0(t);
    CHECK(check_compatibility(s, bd_r_matrix(t, sol.particular)).ok);
    for (const auto& coeffs : sample_r0_coefficients(sol.homogeneous.size(), 5, 1))
      CHECK(check_compatibility(s, bd_r_matrix(t, r0_combination(sol, coeffs))).ok);
  }

  CompatResult bad = check_compatibility(build_initial_seed(t3), standard_r_matrix(3));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failure.empty());
}

TEST_CASE("r0 sampling is seeded") {
  CHECK(sample_r0_coefficients(3, 5, 42) == sample_r0_coefficients(3, 5, 42));
  for (const auto& c : sample_r0_coefficients(4, 10, 3))
    for (const auto& v : c) CHECK((v >= -3 && v <= 3));
}
