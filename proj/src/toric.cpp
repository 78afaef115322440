#include "bdcluster/toric.hpp"

namespace bdc {

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

QVector to_q(const std::vector<int>& v) { return QVector(v.begin(), v.end()); }

QMatrix annihilator_rows(const BDTriple& t) {
  CartanData d = cartan_data(t);
  return {QVector(t.N, 1), to_q(d.B_row)};
}

std::vector<int> degree_vector(const Monomial& m, Side side, int N) {
  std::vector<int> v(N, 0);
  for (int r = 1; r <= N; ++r)
    for (int c = 1; c <= N; ++c) {
      int e = m.exp[Variable{r, c}.index()];
      v[(side == Side::Left ? r : c) - 1] += e;
    }
  return v;
}

}  // namespace

bool is_trivial(const std::vector<int>& v, const BDTriple& t) {
  QMatrix a = annihilator_rows(t);
  int base = rank(a);
  a.push_back(to_q(v));
  return rank(a) == base;
}

bool equivalent(const std::vector<int>& a, const std::vector<int>& b, const BDTriple& t) {
  std::vector<int> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return is_trivial(d, t);
}

std::optional<WeightClass> weight_of(const Polynomial& f, Side side, const BDTriple& t) {
  if (f.is_zero()) throw std::invalid_argument("weight of the zero polynomial");
  WeightClass w{side, degree_vector(f.leading().mono, side, t.N)};
  for (const auto& term : f.terms())
    if (!equivalent(degree_vector(term.mono, side, t.N), w.rep, t)) return std::nullopt;
  return w;
}

int span_dimension(const std::vector<WeightClass>& w, const BDTriple& t) {
  QMatrix a = annihilator_rows(t);
  int base = rank(a);
  for (const auto& c : w) a.push_back(to_q(c.rep));
  return rank(a) - base;
}

bool span_check(const std::vector<WeightClass>& w, const BDTriple& t) { return span_dimension(w, t) == t.N - 2; }

std::vector<BalanceViolation> balance_check(const Seed& s, const std::vector<std::optional<WeightClass>>& weights) {
  const Quiver& q = s.quiver;
  const int N = s.triple.N;
  std::vector<BalanceViolation> out;
  for (int k : q.mutable_ids()) {
    std::vector<int> acc(N, 0);
    Side side = Side::Left;
    for (int j : q.neighbors(k)) {
      if (!weights[j]) throw std::invalid_argument("balance check needs every weight defined");
      side = weights[j]->side;
      for (int i = 0; i < N; ++i) acc[i] += q.b(k, j) * weights[j]->rep[i];
    }
    if (!is_trivial(acc, s.triple)) out.push_back({q.info(k).pos, side, acc});
  }
  return out;
}

ToricReport toric_check(const Seed& s) {
  ToricReport rep;
  const Quiver& q = s.quiver;
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<std::optional<WeightClass>> w(q.capacity());
    std::vector<WeightClass> all;
    bool complete = true;
    for (int id : q.alive()) {
      w[id] = weight_of(s.fn[id], side, s.triple);
      if (!w[id]) {
        rep.equivariant = false;
        complete = false;
        rep.non_equivariant.push_back(side_name(side) + " " + q.info(id).pos.str());
        continue;
      }
      all.push_back(*w[id]);
    }
    (side == Side::Left ? rep.span_left : rep.span_right) = span_dimension(all, s.triple);
    if (!complete) continue;
    for (auto& v : balance_check(s, w)) {
      v.side = side;
      rep.violations.push_back(std::move(v));
    }
  }
  return rep;
}

}  // namespace bdc
