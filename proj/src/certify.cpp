#include "bdcluster/certify.hpp"

#include <algorithm>
#include <map>

namespace bdc {

int Registry::add(Ingredient in) {
  if (auto i = find(in.value)) return *i;
  items.push_back(std::move(in));
  return int(items.size()) - 1;
}

std::optional<int> Registry::find(const Polynomial& p) const {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].value.size() == p.size() && items[i].value == p) return int(i);
  return std::nullopt;
}

namespace {

void add_trace(Registry& reg, const Trace& tr, std::size_t from, std::vector<int>& path, const std::string& tag) {
  for (std::size_t i = from; i < tr.steps.size(); ++i) {
    const TraceEntry& e = tr.steps[i];
    path.push_back(e.id);
    reg.add({tag + " step " + std::to_string(path.size()) + " at " + e.pos.str(), e.after, IngredientKind::Cluster,
             path, e.id});
  }
}

}  // namespace

Registry build_registry(const BDTriple& t) {
  Registry reg;
  reg.triple = t;
  Seed init = build_initial_seed(t);
  const Quiver& q = init.quiver;
  for (int id : q.alive()) {
    bool frozen = q.info(id).frozen;
    reg.add({"initial " + q.info(id).pos.str(), init.fn[id], frozen ? IngredientKind::Stable : IngredientKind::Cluster,
             {}, id});
  }
  for (int k : q.mutable_ids()) {
    Seed s = mutate_seed(init, k);
    reg.add({"mutated " + q.info(k).pos.str(), s.fn[k], IngredientKind::Cluster, {k}, k});
  }

  // Column paths (N,c), (N-1,c), ..., (2,c) and row paths (r,N), ..., (r,2).
  for (int dir = 0; dir < 2; ++dir)
    for (int line = 1; line <= t.N; ++line) {
      Seed s = init;
      std::vector<int> path;
      for (int k = t.N; k >= 2; --k) {
        Pos p = dir == 0 ? Pos{k, line} : Pos{line, k};
        int id = s.id(p);
        if (s.quiver.info(id).frozen) continue;
        try {
          mutate_in_place(s, id);
        } catch (const std::exception&) {
          break;
        }
        path.push_back(id);
        reg.add({std::string(dir == 0 ? "column" : "row") + " path step " + std::to_string(path.size()) + " at " +
                     p.str(),
                 s.fn[id], IngredientKind::Cluster, path, id});
      }
    }

  if (t.beta != t.N - 1 && t.N >= 4) {
    // Mutations along S stay valid cluster variables: freezing and removing isolated vertices
    // never changes an exchange relation of a vertex mutated later.
    Seed s = init;
    Trace tr;
    std::vector<int> path;
    try {
      for (int k = 1; k <= t.N - 1; ++k) {
        std::size_t from = tr.steps.size();
        try {
          apply_sigma(s, plan_path_h(s, k), &tr);
        } catch (...) {
          add_trace(reg, tr, from, path, "S");
          throw;
        }
        add_trace(reg, tr, from, path, "S");
      }
      for (int k = 1; k <= t.N - 2; ++k) {
        std::size_t from = tr.steps.size();
        try {
          apply_sigma(s, plan_path_v(s, k), &tr);
        } catch (...) {
          add_trace(reg, tr, from, path, "S");
          throw;
        }
        add_trace(reg, tr, from, path, "S");
      }
    } catch (const std::exception&) {
      // the steps completed so far remain usable
    }
  }
  if (t.alpha == 1 && t.beta == t.N - 1) {
    Seed s = init;
    std::vector<int> path;
    try {
      for (int m = 1; m <= t.N - 1; ++m)
        for (Pos p : plan_T(t.N, m).path) {
          int id = s.id(p);
          mutate_in_place(s, id);
          path.push_back(id);
          reg.add({"T_" + std::to_string(m) + " step " + std::to_string(path.size()) + " at " + p.str(), s.fn[id],
                   IngredientKind::Cluster, path, id});
        }
    } catch (const std::exception&) {
      // later stages need exchanges outside the supported range
    }
  }
  return reg;
}

bool verify_ingredients(const Registry& reg, std::string* why) {
  const Seed init = build_initial_seed(reg.triple);
  Seed cur = init;
  std::vector<int> cur_path;
  for (const Ingredient& in : reg.items) {
    bool extends = cur_path.size() <= in.path.size() && std::equal(cur_path.begin(), cur_path.end(), in.path.begin());
    if (!extends) {
      cur = init;
      cur_path.clear();
    }
    try {
      for (std::size_t j = cur_path.size(); j < in.path.size(); ++j) {
        mutate_in_place(cur, in.path[j]);
        cur_path.push_back(in.path[j]);
      }
    } catch (const std::exception& e) {
      if (why) *why = "replay of " + in.label + " failed: " + e.what();
      return false;
    }
    bool frozen = init.quiver.info(in.vertex).frozen;
    if (!(cur.fn[in.vertex] == in.value) || (in.kind == IngredientKind::Stable) != frozen) {
      if (why) *why = "replay of " + in.label + " gives a different function";
      return false;
    }
  }
  return true;
}

Polynomial evaluate(const Registry& reg, const std::vector<std::pair<mpq_class, std::vector<int>>>& expr) {
  Polynomial acc;
  for (const auto& [c, factors] : expr) {
    Polynomial p(c);
    for (int i : factors) p = p * reg.items.at(i).value;
    acc += p;
  }
  return acc;
}

bool verify_certificate(const Registry& reg, std::size_t index, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const Certificate& c = reg.certificates.at(index);
  const Polynomial x = Polynomial::var(c.target);
  if (c.direct()) {
    if (!(reg.items.at(c.witness).value == x)) return fail("witness differs from the target");
    return true;
  }
  std::vector<int> earlier;
  for (std::size_t i = 0; i < index; ++i) earlier.push_back(reg.certificates[i].target.index());
  std::sort(earlier.begin(), earlier.end());
  for (const auto& r : c.rep) {
    if (r.exponent < 1) return fail("exponent must be positive");
    for (int v : r.remainder.variables())
      if (!std::binary_search(earlier.begin(), earlier.end(), v))
        return fail("remainder uses an entry not certified earlier");
    const Ingredient& d = reg.items.at(r.denominator);
    if (d.kind != IngredientKind::Cluster) return fail("denominator " + d.label + " is not a cluster variable");
    if (!(x * d.value.pow(unsigned(r.exponent)) == evaluate(reg, r.numerator) + r.remainder))
      return fail("identity fails for denominator " + d.label);
  }
  const Polynomial& f1 = reg.items.at(c.rep[0].denominator).value;
  const Polynomial& f2 = reg.items.at(c.rep[1].denominator).value;
  if (f1 == f2) return fail("denominators coincide");
  if (!gcd(f1, f2).is_constant()) return fail("denominators share a factor");
  return true;
}

bool verify_all_certificates(const Registry& reg, std::string* why) {
  for (std::size_t i = 0; i < reg.certificates.size(); ++i)
    if (!verify_certificate(reg, i, why)) return false;
  return true;
}

namespace {

// Total degree plus the pairings of the row and column degree vectors with a basis of h_T.
struct Grade {
  int deg = 0;
  std::vector<mpq_class> v;
  std::string key() const {
    std::string s = std::to_string(deg);
    for (const auto& x : v) s += "," + x.get_str();
    return s;
  }
  Grade operator-(const Grade& o) const {
    Grade g{deg - o.deg, v};
    for (std::size_t i = 0; i < v.size(); ++i) g.v[i] -= o.v[i];
    return g;
  }
};

std::vector<QVector> ht_diagonals(const BDTriple& t) {
  auto T = h_basis_matrix(t.N);
  std::vector<QVector> out;
  for (const auto& b : ht_space(t).basis) {
    QVector d(t.N);
    for (int k = 0; k < t.N; ++k)
      for (int i = 0; i < t.N - 1; ++i) d[k] += T[k][i] * b[i];
    out.push_back(d);
  }
  return out;
}

Grade grade_of(const Polynomial& p, const std::vector<QVector>& diag, int N) {
  Grade g;
  const Monomial& m = p.leading().mono;
  g.deg = m.deg;
  for (int side = 0; side < 2; ++side)
    for (const auto& d : diag) {
      mpq_class acc = 0;
      for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= N; ++c) {
          int e = m.exp[Variable{r, c}.index()];
          if (e) acc += e * d[(side == 0 ? r : c) - 1];
        }
      g.v.push_back(acc);
    }
  return g;
}

// Matches target on every monomial with an uncertified variable; the rest is returned as remainder.
std::optional<Representation> express(const Registry& reg, const Polynomial& target,
                                      const std::vector<std::vector<int>>& products,
                                      const std::vector<bool>& certified) {
  auto open_mono = [&](const Monomial& m) {
    for (int i = 0; i < kMaxVars; ++i)
      if (m.exp[i] && !certified[i]) return true;
    return false;
  };
  std::vector<Polynomial> vals;
  for (const auto& fs : products) {
    Polynomial p(1);
    for (int i : fs) p = p * reg.items[i].value;
    vals.push_back(std::move(p));
  }
  std::map<std::vector<std::uint8_t>, int> rows;
  auto row_of = [&](const Monomial& m) {
    std::vector<std::uint8_t> k(m.exp.begin(), m.exp.end());
    return rows.emplace(k, int(rows.size())).first->second;
  };
  for (const auto& t : target.terms())
    if (open_mono(t.mono)) row_of(t.mono);
  for (const auto& v : vals)
    for (const auto& t : v.terms())
      if (open_mono(t.mono)) row_of(t.mono);
  const int n = int(vals.size());
  QMatrix a(rows.size(), QVector(n));
  QVector b(rows.size());
  for (int j = 0; j < n; ++j)
    for (const auto& t : vals[j].terms())
      if (open_mono(t.mono)) a[row_of(t.mono)][j] = t.coef;
  for (const auto& t : target.terms())
    if (open_mono(t.mono)) b[row_of(t.mono)] = t.coef;
  auto sol = solve_particular(a, b, n);
  if (!sol) return std::nullopt;
  Representation r;
  r.remainder = target;
  for (int j = 0; j < n; ++j)
    if ((*sol)[j] != 0) {
      r.numerator.push_back({(*sol)[j], products[j]});
      r.remainder -= vals[j].scaled((*sol)[j]);
    }
  return r;
}

constexpr std::size_t kMaxProducts = 400;
constexpr std::size_t kMaxDenominators = 80;

}  // namespace

std::optional<int> certify_entry(Registry& reg, Variable x) {
  const BDTriple& t = reg.triple;
  const Polynomial xp = Polynomial::var(x);
  if (auto w = reg.find(xp)) {
    Certificate c;
    c.target = x;
    c.witness = *w;
    c.provenance = "equals " + reg.items[*w].label;
    reg.certificates.push_back(c);
    return int(reg.certificates.size()) - 1;
  }

  std::vector<bool> certified(kMaxVars, false);
  for (const auto& c : reg.certificates) certified[c.target.index()] = true;

  auto diag = ht_diagonals(t);
  std::vector<Grade> grade(reg.items.size());
  std::map<std::string, std::vector<int>> by_grade;
  for (std::size_t i = 0; i < reg.items.size(); ++i) {
    grade[i] = grade_of(reg.items[i].value, diag, t.N);
    by_grade[grade[i].key()].push_back(int(i));
  }

  std::vector<int> dens;
  for (std::size_t i = 0; i < reg.items.size(); ++i)
    if (reg.items[i].kind == IngredientKind::Cluster)
      dens.push_back(int(i));
  std::stable_sort(dens.begin(), dens.end(), [&](int a, int b) {
    return reg.items[a].value.total_degree() < reg.items[b].value.total_degree();
  });
  if (dens.size() > kMaxDenominators) dens.resize(kMaxDenominators);

  std::vector<Representation> found;
  for (int d : dens) {
    const Polynomial& f = reg.items[d].value;
    bool coprime_to_found = true;
    for (const auto& r : found)
      if (!gcd(reg.items[r.denominator].value, f).is_constant()) coprime_to_found = false;
    if (!coprime_to_found) continue;

    Polynomial m = xp * f;
    Grade gm = grade_of(m, diag, t.N);
    std::vector<std::vector<int>> products;
    if (auto it = by_grade.find(gm.key()); it != by_grade.end())
      for (int i : it->second) products.push_back({i});
    for (std::size_t i = 0; i < reg.items.size() && products.size() < kMaxProducts; ++i) {
      if (grade[i].deg == 0 || grade[i].deg >= gm.deg) continue;
      auto it = by_grade.find((gm - grade[i]).key());
      if (it == by_grade.end()) continue;
      for (int j : it->second)
        if (j >= int(i)) products.push_back({int(i), j});
    }
    auto r = express(reg, m, products, certified);
    if (!r) continue;
    r->denominator = d;
    found.push_back(std::move(*r));
    if (found.size() == 2) break;
  }
  if (found.size() < 2) return std::nullopt;

  Certificate c;
  c.target = x;
  c.rep[0] = found[0];
  c.rep[1] = found[1];
  c.provenance = "two representations over " + reg.items[found[0].denominator].label + " and " +
                 reg.items[found[1].denominator].label;
  reg.certificates.push_back(c);
  return int(reg.certificates.size()) - 1;
}

IncompleteCoverage::IncompleteCoverage(std::vector<Variable> m)
    : std::runtime_error([&] {
        std::string s = "uncertified entries:";
        for (auto v : m) s += " x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
        return s;
      }()),
      missing(std::move(m)) {}

std::vector<Variable> boundary_entries(int N) {
  std::vector<Variable> r;
  for (int j = 1; j <= N; ++j) r.push_back({N, j});
  for (int i = 1; i < N; ++i) r.push_back({i, N});
  return r;
}

void add_two_step(Registry& reg) {
  Seed init = build_initial_seed(reg.triple);
  for (int a : init.quiver.mutable_ids()) {
    Seed s1 = mutate_seed(init, a);
    for (int b : s1.quiver.mutable_ids()) {
      if (b == a) continue;
      Seed s2 = s1;
      try {
        mutate_in_place(s2, b);
      } catch (const std::exception&) {
        continue;
      }
      reg.add({"mutated " + init.quiver.info(a).pos.str() + " then " + init.quiver.info(b).pos.str(), s2.fn[b],
               IngredientKind::Cluster, {a, b}, b});
    }
  }
}

CoverageReport certify_targets(const BDTriple& t, const std::vector<Variable>& targets) {
  CoverageReport rep;
  rep.registry = build_registry(t);
  std::vector<Variable> pending = targets;
  for (int round = 0; round < 2 && !pending.empty(); ++round) {
    if (round == 1) add_two_step(rep.registry);
    // Certified entries may appear in later remainders, so retry until nothing changes.
    for (bool progress = true; progress && !pending.empty();) {
      progress = false;
      std::vector<Variable> next;
      for (Variable x : pending) {
        if (certify_entry(rep.registry, x)) {
          rep.covered.push_back(x);
          progress = true;
        } else {
          next.push_back(x);
        }
      }
      pending = std::move(next);
    }
  }
  rep.missing = pending;
  std::sort(rep.covered.begin(), rep.covered.end());
  return rep;
}

CoverageReport certify_boundary(const BDTriple& t) { return certify_targets(t, boundary_entries(t.N)); }

CoverageReport certify_interior_1n1(const BDTriple& t) {
  if (t.alpha != 1 || t.beta != t.N - 1) throw std::invalid_argument("interior certification needs the triple (1, N-1)");
  std::vector<Variable> targets = boundary_entries(t.N), interior;
  for (int i = 1; i < t.N; ++i)
    for (int j = 1; j < t.N; ++j) interior.push_back({i, j});
  targets.insert(targets.end(), interior.begin(), interior.end());
  CoverageReport rep = certify_targets(t, targets);
  auto inside = [&](const Variable& v) { return v.row < t.N && v.col < t.N; };
  std::erase_if(rep.covered, [&](const Variable& v) { return !inside(v); });
  std::erase_if(rep.missing, [&](const Variable& v) { return !inside(v); });
  return rep;
}

CoverageReport certify_all(const BDTriple& t) {
  std::vector<Variable> targets;
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j) targets.push_back({i, j});
  CoverageReport rep = certify_targets(t, targets);
  if (!rep.complete()) throw IncompleteCoverage(rep.missing);
  return rep;
}

}  // namespace bdc
