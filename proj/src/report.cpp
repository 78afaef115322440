#include "bdcluster/report.hpp"

#include <algorithm>

namespace bdc {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string rational(const mpq_class& q) { return q.get_str(); }

namespace {

std::string pos_label(Pos p) { return std::to_string(p.r) + "," + std::to_string(p.c); }

json rationals(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational(x));
  return a;
}

json rationals(const QMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(rationals(row));
  return a;
}

Check make(std::string name, bool ok, json details) { return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(details)}; }

}  // namespace

json triple_json(const BDTriple& t) {
  json iso = json::array();
  for (Iso i : t.applied) iso.push_back(i == Iso::Reversal ? "reversal" : "longest-element");
  return {{"id", t.str()}, {"N", t.N}, {"alpha", t.alpha}, {"beta", t.beta}, {"isomorphisms", iso}};
}

json seed_json(const Seed& s) {
  const Quiver& q = s.quiver;
  json verts = json::array();
  for (int id : q.visible()) {
    const VertexInfo& v = q.info(id);
    verts.push_back({{"pos", pos_label(v.pos)}, {"frozen", v.frozen}, {"function", s.fn[id].str()}});
  }
  json arrows = json::array();
  for (int u : q.visible())
    for (int v : q.visible())
      if (q.b(u, v) > 0)
        arrows.push_back({{"from", pos_label(q.info(u).pos)},
                          {"to", pos_label(q.info(v).pos)},
                          {"weight", q.b(u, v)},
                          {"standard", q.has_standard_displacement(u, v)}});
  return {{"triple", triple_json(s.triple)},
          {"vertices", q.visible().size()},
          {"frozen", q.frozen_ids().size()},
          {"mutable", q.mutable_ids().size()},
          {"cluster", verts},
          {"arrows", arrows}};
}

std::vector<Pos> local_regularity_failures(const Seed& s) {
  std::vector<Pos> bad;
  for (int id : s.quiver.mutable_ids()) {
    Polynomial q;
    bool ok = false;
    try {
      ok = try_divide(exchange_numerator(s, id), s.fn[id], q);
    } catch (const Unsupported&) {
      ok = false;
    }
    if (!ok) bad.push_back(s.quiver.info(id).pos);
  }
  return bad;
}

Check check_rank(const Seed& s) {
  const Quiver& q = s.quiver;
  const int N = s.triple.N;
  int verts = int(q.visible().size()), frozen = int(q.frozen_ids().size()), mut = int(q.mutable_ids().size());
  int r = rank_check(q);
  bool nonconst = nonconstancy_check(s);
  json d = {{"vertices", verts}, {"frozen", frozen}, {"mutable", mut}, {"rank", r}, {"stable_nonconstant", nonconst}};
  bool ok = verts == N * N - 1 && frozen == 2 * (N - 2) && r == mut && nonconst;
  return make("rank", ok, d);
}

Check check_compat(const Seed& s, const ReportOptions& opt) {
  R0Solution sol;
  try {
    sol = solve_r0(s.triple);
  } catch (const Inconsistent& e) {
    return make("compat", false, {{"error", e.what()}});
  }
  std::vector<std::pair<std::string, QMatrix>> variants{{"particular", sol.particular}};
  auto coeffs = sample_r0_coefficients(sol.homogeneous.size(), opt.r0_samples, opt.rng_seed);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    variants.push_back({"sample " + std::to_string(i + 1), r0_combination(sol, coeffs[i])});

  bool ok = true;
  json runs = json::array();
  for (const auto& [label, r0] : variants) {
    json run = {{"label", label}, {"r0", rationals(r0)}};
    RMatrix r = bd_r_matrix(s.triple, r0);
    bool conditions = r0_conditions_hold(s.triple, r0) && splits_casimir(r);
    CompatResult c = check_compatibility(s, r);
    run["r0_conditions"] = conditions;
    run["ok"] = conditions && c.ok;
    if (c.ok) run["D"] = rationals(c.D);
    else run["failure"] = c.failure;
    ok = ok && conditions && c.ok;
    runs.push_back(std::move(run));
  }
  return make("compat", ok, {{"homogeneous_dimension", sol.homogeneous.size()}, {"runs", runs}});
}

Check check_toric(const Seed& s) {
  ToricReport t = toric_check(s);
  json viol = json::array();
  for (const auto& v : t.violations)
    viol.push_back({{"vertex", pos_label(v.vertex)}, {"side", side_name(v.side)}, {"difference", v.difference}});
  json d = {{"equivariant", t.equivariant},
            {"non_equivariant", t.non_equivariant},
            {"span_left", t.span_left},
            {"span_right", t.span_right},
            {"expected_span", s.triple.N - 2},
            {"violations", viol}};
  return make("toric", t.ok(s.triple.N), d);
}

Check check_laurent(const Seed& s) {
  std::vector<Pos> bad = local_regularity_failures(s);
  json b = json::array();
  for (Pos p : bad) b.push_back(pos_label(p));
  return make("laurent", bad.empty(), {{"mutations", s.quiver.mutable_ids().size()}, {"not_divisible", b}});
}

Check check_sequences(const Seed& s) {
  const BDTriple& t = s.triple;
  json d = json::object();
  bool ran = false, ok = true;
  if (t.beta != t.N - 1 && t.N >= 4) {
    ran = true;
    try {
      SequenceResult r = run_sequence_S(s);
      d["S"] = {{"ok", true}, {"closed_forms", r.closed_forms_checked}, {"mutations", r.trace.steps.size()}};
    } catch (const std::exception& e) {
      ok = false;
      d["S"] = {{"ok", false}, {"error", e.what()}};
    }
  }
  if (t.alpha == 1 && t.beta == t.N - 1) {
    try {
      SequenceResult r = run_sequence_T(s, t.N - 1);
      ran = true;
      d["T"] = {{"ok", true}, {"stages", t.N - 1}, {"closed_forms", r.closed_forms_checked}};
    } catch (const Unsupported& e) {
      d["T"] = {{"ok", nullptr}, {"unsupported", e.what()}};
    } catch (const std::exception& e) {
      ran = true;
      ok = false;
      d["T"] = {{"ok", false}, {"error", e.what()}};
    }
  }
  if (!ran) return {"sequences", Status::Skipped, d};
  return make("sequences", ok, d);
}

namespace {

json certificate_json(const Registry& reg, const Certificate& c) {
  json j = {{"target", pos_label({c.target.row, c.target.col})}, {"provenance", c.provenance}};
  if (c.direct()) {
    j["witness"] = reg.items[c.witness].label;
    return j;
  }
  json reps = json::array();
  for (const auto& r : c.rep) {
    json num = json::array();
    for (const auto& [coef, factors] : r.numerator) {
      json fs = json::array();
      for (int i : factors) fs.push_back(reg.items[i].label);
      num.push_back({{"coef", rational(coef)}, {"factors", fs}});
    }
    reps.push_back({{"denominator", reg.items[r.denominator].label},
                    {"exponent", r.exponent},
                    {"numerator", num},
                    {"remainder", r.remainder.str()}});
  }
  j["representations"] = reps;
  return j;
}

}  // namespace

Check check_membership(const BDTriple& t) {
  std::vector<Variable> targets;
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j) targets.push_back({i, j});
  CoverageReport rep = certify_targets(t, targets);
  std::string why;
  bool ingredients = verify_ingredients(rep.registry, &why);
  bool certs = ingredients && verify_all_certificates(rep.registry, &why);
  json missing = json::array();
  for (Variable x : rep.missing) missing.push_back(pos_label({x.row, x.col}));
  int direct = 0;
  json listing = json::array();
  for (const auto& c : rep.registry.certificates) {
    direct += c.direct();
    listing.push_back(certificate_json(rep.registry, c));
  }
  json d = {{"covered", rep.covered.size()},
            {"missing", missing},
            {"certificates", rep.registry.certificates.size()},
            {"direct", direct},
            {"ingredients", rep.registry.items.size()},
            {"reverified", certs},
            {"listing", listing}};
  if (!certs) d["error"] = why;
  return make("membership", rep.complete() && certs, d);
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"compat", "laurent", "membership", "rank", "sequences", "toric"};
  return names;
}

Check run_check(const std::string& name, const Seed& s, const ReportOptions& opt) {
  if (name == "rank") return check_rank(s);
  if (name == "compat") return check_compat(s, opt);
  if (name == "toric") return check_toric(s);
  if (name == "laurent") return check_laurent(s);
  if (name == "sequences") return check_sequences(s);
  if (name == "membership") return check_membership(s.triple);
  throw std::invalid_argument("unknown check " + name);
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
  return {{"schema", kReportSchema},
          {"input", {{"N", triple.N}, {"alpha", input_alpha}, {"beta", input_beta}}},
          {"triple", triple_json(triple)},
          {"conventions", {{"sign", kSignConvention}, {"monomial_order", kMonomialOrder}}},
          {"options", {{"r0_samples", options.r0_samples}, {"rng_seed", options.rng_seed}}},
          {"checks", cs},
          {"ok", ok()}};
}

std::string VerificationReport::dump() const { return to_json().dump(2) + "\n"; }

VerificationReport verify(int N, int alpha, int beta, const std::vector<std::string>& names,
                          const ReportOptions& opt) {
  VerificationReport rep;
  rep.input_alpha = alpha;
  rep.input_beta = beta;
  rep.triple = canonicalize(N, alpha, beta);
  rep.options = opt;
  std::vector<std::string> todo;
  for (const auto& n : names) {
    if (n == "all") todo.insert(todo.end(), check_names().begin(), check_names().end());
    else todo.push_back(n);
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  Seed s = build_initial_seed(rep.triple);
  for (const auto& n : todo) rep.checks.push_back(run_check(n, s, opt));
  return rep;
}

}  // namespace bdc
