#pragma once

#include "bdcluster/mutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdc {

enum class IngredientKind { Stable, Cluster };

// A cluster or stable variable, with the mutation path that re-derives it.
struct Ingredient {
  std::string label;
  Polynomial value;
  IngredientKind kind = IngredientKind::Cluster;
  std::vector<int> path;  // vertex ids mutated from the initial seed
  int vertex = -1;        // vertex carrying value after the path
};

// target * denominator^exponent = sum coef * prod(ingredients) + remainder,
// where the remainder only involves entries certified earlier.
struct Representation {
  std::vector<std::pair<mpq_class, std::vector<int>>> numerator;
  Polynomial remainder;
  int denominator = -1;
  int exponent = 1;
};

struct Certificate {
  Variable target;
  int witness = -1;  // >= 0: target equals this ingredient
  Representation rep[2];
  std::string provenance;
  bool direct() const { return witness >= 0; }
};

struct Registry {
  BDTriple triple;
  std::vector<Ingredient> items;
  std::vector<Certificate> certificates;
  int add(Ingredient in);  // deduplicates by value; returns the index
  std::optional<int> find(const Polynomial& p) const;
};

// Pool of cluster and stable variables: the initial seed, its neighbours, the row and column
// mutation paths and the S/T runs.
Registry build_registry(const BDTriple& t);

// Replays every mutation path from a fresh initial seed.
bool verify_ingredients(const Registry& reg, std::string* why = nullptr);
Polynomial evaluate(const Registry& reg, const std::vector<std::pair<mpq_class, std::vector<int>>>& expr);
// Certificate `index` against the ingredients and the certificates before it: both identities
// exactly, distinct coprime cluster-variable denominators, remainders in earlier entries only.
bool verify_certificate(const Registry& reg, std::size_t index, std::string* why = nullptr);
bool verify_all_certificates(const Registry& reg, std::string* why = nullptr);

// Searches for a certificate of x_ij; on success appends it and returns its index.
std::optional<int> certify_entry(Registry& reg, Variable x);

class IncompleteCoverage : public std::runtime_error {
 public:
  explicit IncompleteCoverage(std::vector<Variable> missing);
  std::vector<Variable> missing;
};

struct CoverageReport {
  Registry registry;
  std::vector<Variable> covered, missing;
  bool complete() const { return missing.empty(); }
};

std::vector<Variable> boundary_entries(int N);  // last row and last column
CoverageReport certify_targets(const BDTriple& t, const std::vector<Variable>& targets);
CoverageReport certify_boundary(const BDTriple& t);
// Entries above and left of the last row and column; boundary entries are certified alongside.
CoverageReport certify_interior_1n1(const BDTriple& t);
// All N^2 entries; every certificate re-verified. Throws IncompleteCoverage when any entry is missing.
CoverageReport certify_all(const BDTriple& t);

}  // namespace bdc
