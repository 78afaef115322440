#pragma once

#include "bdcluster/mutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace testsupport {

using bdc::Polynomial;

// Random polynomial in the variables of a dim x dim matrix.
inline Polynomial random_poly(std::mt19937& rng, int terms, int dim = 3, int max_exp = 2) {
  std::uniform_int_distribution<int> coef(-5, 5), var(1, dim), ex(0, max_exp), nv(0, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    long c = coef(rng);
    Polynomial m(c ? c : 1L);
    int k = nv(rng);
    for (int i = 0; i < k; ++i) m *= Polynomial::var(var(rng), var(rng)).pow(unsigned(ex(rng)));
    p += m;
  }
  return p;
}

inline Polynomial random_nonzero(std::mt19937& rng, int terms, int dim = 3) {
  for (;;) {
    Polynomial p = random_poly(rng, terms, dim);
    if (!p.is_zero()) return p;
  }
}

// Leibniz expansion over permutations; independent of the library's determinant.
inline mpz_class leibniz(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class acc = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    mpz_class prod = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
    acc += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline std::vector<std::vector<long>> drop(const std::vector<std::vector<long>>& a, std::vector<int> rows,
                                           std::vector<int> cols) {
  std::vector<std::vector<long>> r;
  for (int i = 0; i < int(a.size()); ++i) {
    if (std::count(rows.begin(), rows.end(), i)) continue;
    std::vector<long> row;
    for (int j = 0; j < int(a[i].size()); ++j)
      if (!std::count(cols.begin(), cols.end(), j)) row.push_back(a[i][j]);
    r.push_back(row);
  }
  return r;
}

inline bdc::PolyMatrix constant_matrix(const std::vector<std::vector<long>>& a) {
  bdc::PolyMatrix m(int(a.size()), int(a[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Polynomial(a[i][j]);
  return m;
}

struct SuiteResult {
  int cases = 0, failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  void fail(const std::string& why) {
    if (!failures++) first_failure = why;
  }
};

// Desnanot-Jacobi on random integer matrices of size 4..6: the library check, and both sides
// recomputed with the Leibniz oracle.
inline SuiteResult desnanot_jacobi_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> size(4, 6);
  SuiteResult res;
  for (int c = 0; c < count; ++c) {
    int n = size(rng);
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    std::uniform_int_distribution<int> idx(0, n - 1);
    int r1 = idx(rng), r2 = idx(rng), c1 = idx(rng), c2 = idx(rng);
    while (r2 == r1) r2 = idx(rng);
    while (c2 == c1) c2 = idx(rng);
    if (r1 > r2) std::swap(r1, r2);
    if (c1 > c2) std::swap(c1, c2);
    ++res.cases;
    bool lib = bdc::desnanot_jacobi_check(constant_matrix(a), r1, r2, c1, c2);
    mpz_class lhs = leibniz(a) * leibniz(drop(a, {r1, r2}, {c1, c2}));
    mpz_class rhs = leibniz(drop(a, {r1}, {c1})) * leibniz(drop(a, {r2}, {c2})) -
                    leibniz(drop(a, {r2}, {c1})) * leibniz(drop(a, {r1}, {c2}));
    if (!lib || lhs != rhs) res.fail("case " + std::to_string(c));
  }
  return res;
}

// Mutating twice at a random mutable vertex restores functions and quiver.
inline SuiteResult involution_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<bdc::Seed> seeds;
  for (int N = 3; N <= 5; ++N)
    for (const auto& t : bdc::canonical_triples(N)) seeds.push_back(bdc::build_initial_seed(t));
  SuiteResult res;
  for (int c = 0; c < count; ++c) {
    const bdc::Seed& s = seeds[rng() % seeds.size()];
    auto mut = s.quiver.mutable_ids();
    int v = mut[rng() % mut.size()];
    ++res.cases;
    bdc::Seed twice = bdc::mutate_seed(bdc::mutate_seed(s, v), v);
    bool same = true;
    for (int id : s.quiver.alive()) same = same && twice.fn[id] == s.fn[id];
    std::map<int, int> ident;
    for (int id : s.quiver.alive()) ident[id] = id;
    if (!same || !bdc::quiver_isomorphic(twice.quiver, s.quiver, ident))
      res.fail(s.triple.str() + " at " + s.quiver.info(v).pos.str());
  }
  return res;
}

// Ring axioms, division round trips and agreement with numeric evaluation.
inline SuiteResult ring_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-7, 7);
  SuiteResult res;
  for (int c = 0; c < count; ++c) {
    Polynomial f = random_nonzero(rng, 5), g = random_nonzero(rng, 5), h = random_poly(rng, 4);
    ++res.cases;
    std::map<int, mpq_class> point;
    auto at = [&](bdc::Variable v) -> mpq_class {
      auto it = point.find(v.index());
      if (it == point.end()) it = point.emplace(v.index(), val(rng)).first;
      return it->second;
    };
    bool ok = (f + g) + h == f + (g + h) && f + g == g + f && (f * g) * h == f * (g * h) && f * g == g * f &&
              f * (g + h) == f * g + f * h && f - f == Polynomial() && f * Polynomial(1) == f;
    Polynomial q;
    ok = ok && bdc::try_divide(f * g, g, q) && q == f;
    ok = ok && (f * g).eval(at) == f.eval(at) * g.eval(at) && (f + h).eval(at) == f.eval(at) + h.eval(at);
    if (!ok) res.fail("case " + std::to_string(c) + ": f=" + f.str() + " g=" + g.str());
  }
  return res;
}

}  // namespace testsupport
