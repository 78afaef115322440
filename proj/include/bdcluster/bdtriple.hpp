#pragma once

#include "bdcluster/matrix.hpp"

#include <string>
#include <vector>

namespace bdc {

class InvalidRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Iso { Reversal, LongestElement };

// A Belavin-Drinfeld triple with one-element sets {alpha} -> {beta} for SL(N).
struct BDTriple {
  int N = 0;
  int alpha = 0;
  int beta = 0;
  bool canonical = false;
  std::vector<Iso> applied;                    // isomorphisms mapping the input to this triple
  std::vector<std::pair<int, int>> orbit;      // every (alpha, beta) equivalent to the input

  int k_T() const { return N - 2; }
  std::string str() const;  // "N:alpha->beta"
  friend bool operator==(const BDTriple& a, const BDTriple& b) {
    return a.N == b.N && a.alpha == b.alpha && a.beta == b.beta;
  }
};

// Validates without canonicalizing.
BDTriple make_triple(int N, int alpha, int beta);
BDTriple canonicalize(int N, int alpha, int beta);
inline BDTriple canonicalize(const BDTriple& t) { return canonicalize(t.N, t.alpha, t.beta); }
BDTriple parse_triple(const std::string& s);  // "N:alpha->beta"

// All canonical triples for a given N, ordered by (alpha, beta).
std::vector<BDTriple> canonical_triples(int N);

struct CartanData {
  std::vector<std::vector<int>> C;  // (N-1)x(N-1)
  std::vector<int> A_row;           // length N-1
  std::vector<int> B_row;           // length N
};

CartanData cartan_data(const BDTriple& t);
// Columns e_j - e_{j+1}: the N x (N-1) change of basis from {h_i} to diagonal coordinates.
std::vector<std::vector<int>> h_basis_matrix(int N);

struct HTSpace {
  std::vector<QVector> basis;  // coefficient vectors in the basis h_i
};

HTSpace ht_space(const BDTriple& t);

}  // namespace bdc
