#include "bdcluster/bdtriple.hpp"

#include <algorithm>
#include <regex>

namespace bdc {

std::string BDTriple::str() const {
  return std::to_string(N) + ":" + std::to_string(alpha) + "->" + std::to_string(beta);
}

BDTriple make_triple(int N, int alpha, int beta) {
  if (N < 3 || N > kMaxDim) throw InvalidRoot("N must lie in [3," + std::to_string(kMaxDim) + "]");
  if (alpha < 1 || alpha > N - 1 || beta < 1 || beta > N - 1)
    throw InvalidRoot("simple root index out of range [1,N-1]");
  if (alpha == beta) throw DegenerateTriple("alpha must differ from beta");
  BDTriple t;
  t.N = N;
  t.alpha = alpha;
  t.beta = beta;
  t.canonical = alpha < beta;
  return t;
}

BDTriple canonicalize(int N, int alpha, int beta) {
  BDTriple in = make_triple(N, alpha, beta);
  struct Cand {
    int a, b;
    std::vector<Iso> path;
  };
  // Orbit of the group generated by reversal (a,b)->(b,a) and relabeling j->N-j.
  std::vector<Cand> orbit = {{alpha, beta, {}},
                             {beta, alpha, {Iso::Reversal}},
                             {N - alpha, N - beta, {Iso::LongestElement}},
                             {N - beta, N - alpha, {Iso::Reversal, Iso::LongestElement}}};
  const Cand* best = nullptr;
  for (const auto& c : orbit) {
    if (c.a >= c.b) continue;
    if (!best || std::pair(c.a, c.b) < std::pair(best->a, best->b) ||
        (std::pair(c.a, c.b) == std::pair(best->a, best->b) && c.path.size() < best->path.size()))
      best = &c;
  }
  BDTriple t = in;
  t.alpha = best->a;
  t.beta = best->b;
  t.canonical = true;
  t.applied = best->path;
  for (const auto& c : orbit) {
    std::pair<int, int> p{c.a, c.b};
    if (std::find(t.orbit.begin(), t.orbit.end(), p) == t.orbit.end()) t.orbit.push_back(p);
  }
  std::sort(t.orbit.begin(), t.orbit.end());
  return t;
}

BDTriple parse_triple(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*:\s*(\d+)\s*->\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw InvalidRoot("expected N:alpha->beta, got '" + s + "'");
  return make_triple(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
}

std::vector<BDTriple> canonical_triples(int N) {
  std::vector<BDTriple> r;
  for (int a = 1; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      BDTriple t = canonicalize(N, a, b);
      if (t.alpha == a && t.beta == b) r.push_back(t);
    }
  return r;
}

CartanData cartan_data(const BDTriple& t) {
  int n = t.N - 1;
  CartanData d;
  d.C.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.C[i][j] = i == j ? 2 : std::abs(i - j) == 1 ? -1 : 0;
  d.A_row.resize(n);
  for (int j = 0; j < n; ++j) d.A_row[j] = d.C[t.alpha - 1][j] - d.C[t.beta - 1][j];
  d.B_row.assign(t.N, 0);
  d.B_row[t.alpha - 1] += 1;
  d.B_row[t.alpha] -= 1;
  d.B_row[t.beta - 1] -= 1;
  d.B_row[t.beta] += 1;
  return d;
}

std::vector<std::vector<int>> h_basis_matrix(int N) {
  std::vector<std::vector<int>> T(N, std::vector<int>(N - 1, 0));
  for (int j = 0; j < N - 1; ++j) {
    T[j][j] = 1;
    T[j + 1][j] = -1;
  }
  return T;
}

HTSpace ht_space(const BDTriple& t) {
  CartanData d = cartan_data(t);
  QMatrix a(1, QVector(d.A_row.begin(), d.A_row.end()));
  return {null_space(a, t.N - 1)};
}

}  // namespace bdc
