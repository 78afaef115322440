#pragma once

#include "bdcluster/seed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdc {

enum class Side { Left, Right };
std::string side_name(Side s);

// Row-degree (Left) or column-degree (Right) counts of one monomial, modulo span{1, B_row}.
struct WeightClass {
  Side side = Side::Left;
  std::vector<int> rep;
};

// True when a - b lies in span{(1,...,1), B_row}.
bool equivalent(const std::vector<int>& a, const std::vector<int>& b, const BDTriple& t);
bool is_trivial(const std::vector<int>& v, const BDTriple& t);

// nullopt when the monomials of f fall into different classes.
std::optional<WeightClass> weight_of(const Polynomial& f, Side side, const BDTriple& t);

// Dimension of the span of the weights as functionals on h_T.
int span_dimension(const std::vector<WeightClass>& w, const BDTriple& t);
bool span_check(const std::vector<WeightClass>& w, const BDTriple& t);

struct BalanceViolation {
  Pos vertex;
  Side side = Side::Left;
  std::vector<int> difference;
};

// weights indexed by vertex id; every mutable vertex must have in-weights minus out-weights trivial.
std::vector<BalanceViolation> balance_check(const Seed& s, const std::vector<std::optional<WeightClass>>& weights);

struct ToricReport {
  bool equivariant = true;
  std::vector<std::string> non_equivariant;  // vertex labels
  int span_left = 0, span_right = 0;
  std::vector<BalanceViolation> violations;
  bool ok(int N) const {
    return equivariant && span_left == N - 2 && span_right == N - 2 && violations.empty();
  }
};

ToricReport toric_check(const Seed& s);

}  // namespace bdc
