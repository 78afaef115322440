#pragma once

#include "bdcluster/seed.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bdc {

class Inconsistent : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// r0 in h (x) h, written as r0 = sum R[k][l] e_kk (x) e_ll with zero row and column sums.
struct R0Solution {
  QMatrix particular;
  std::vector<QMatrix> homogeneous;
};

R0Solution solve_r0(const BDTriple& t);
// particular + sum c_i * homogeneous_i
QMatrix r0_combination(const R0Solution& s, const std::vector<mpq_class>& c);
// The Cartan part of the Casimir element: delta_kl - 1/N.
QMatrix casimir_cartan(int N);

// Coefficients over elementary matrices: key (i,j,k,l) stands for e_ij (x) e_kl, 1-based.
struct RMatrix {
  int N = 0;
  std::map<std::array<int, 4>, mpq_class> coef;
};

RMatrix bd_r_matrix(const BDTriple& t, const QMatrix& r0);
// No glued part and r0 = t0/2.
RMatrix standard_r_matrix(int N);
RMatrix flip(const RMatrix& r);  // r^21
// r + r^21 == t with t the Casimir element of the trace form on sl_N.
bool splits_casimir(const RMatrix& r);
// Checks that r0 satisfies both defining linear conditions.
bool r0_conditions_hold(const BDTriple& t, const QMatrix& r0);

// Bracket of two functions via the left and right invariant derivations.
Polynomial bracket(const Polynomial& f, const Polynomial& g, const RMatrix& r);

// {x_u, x_v} for every pair of variables of the N x N matrix, keyed by variable index.
using BracketTable = std::map<std::pair<int, int>, Polynomial>;
BracketTable entry_bracket_table(const RMatrix& r);
// Biderivation extension of a coordinate table.
Polynomial bracket(const Polynomial& f, const Polynomial& g, const BracketTable& tbl);

// {f,g} = w f g with constant w, or nullopt.
std::optional<mpq_class> log_canonical_coefficient(const Polynomial& f, const Polynomial& g, const RMatrix& r);

struct CompatResult {
  bool ok = false;
  std::vector<int> order;  // vertex ids: mutable first, then frozen
  QMatrix omega;           // over `order`
  std::vector<mpq_class> D;
  std::string failure;
};

// Builds the coefficient matrix of the extended cluster and checks B~ Omega = [D 0].
CompatResult check_compatibility(const Seed& s, const RMatrix& r);

// Small integer coefficients in [-3,3] for sampled class members.
std::vector<std::vector<mpq_class>> sample_r0_coefficients(std::size_t dim, int samples, std::uint32_t seed);

}  // namespace bdc
