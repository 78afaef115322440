// bdcluster: build, mutate and verify the cluster structures attached to minimal
// Belavin-Drinfeld triples on SL(N).
#include "bdcluster/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace bdc;
using nlohmann::json;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 0, alpha = 0, beta = 0;
  std::string out;
  int r0_samples = 5;
  std::uint32_t seed = 1;
  std::string at;
  std::string sequence;
  int m = 0;
  std::string check;
  bool dot = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

BDTriple triple_of(const Options& o) {
  try {
    return canonicalize(o.n, o.alpha, o.beta);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

Pos parse_pos(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Usage("--at expects r,c");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Usage("--at expects r,c");
  }
}

int cmd_build_seed(const Options& o) {
  Seed s = build_initial_seed(triple_of(o));
  emit(o, seed_json(s).dump(2) + "\n");
  return 0;
}

int cmd_mutate(const Options& o) {
  Seed s = build_initial_seed(triple_of(o));
  Pos p = parse_pos(o.at);
  auto id = s.quiver.at(p);
  if (!id || s.quiver.info(*id).aux) throw Usage("no vertex at " + p.str());
  if (s.quiver.info(*id).frozen) throw Usage("vertex " + p.str() + " is frozen");
  Polynomial before = s.fn[*id];
  try {
    mutate_in_place(s, *id);
  } catch (const NotDivisible&) {
    std::cerr << "exchange at " << p.str() << " is not polynomial\n";
    return 1;
  }
  json j = seed_json(s);
  j["mutated"] = {{"pos", std::to_string(p.r) + "," + std::to_string(p.c)},
                  {"before", before.str()},
                  {"after", s.fn[*id].str()}};
  emit(o, j.dump(2) + "\n");
  return 0;
}

int cmd_run_sequence(const Options& o) {
  BDTriple t = triple_of(o);
  Seed s = build_initial_seed(t);
  SequenceResult r;
  try {
    if (o.sequence == "S") {
      r = run_sequence_S(s);
    } else {
      int m = o.m ? o.m : t.N - 1;
      r = run_sequence_T(s, m);
    }
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  } catch (const std::exception& e) {
    std::cerr << "sequence " << o.sequence << " failed: " << e.what() << "\n";
    return 1;
  }
  json steps = json::array();
  for (const auto& e : r.trace.steps)
    steps.push_back({{"pos", std::to_string(e.pos.r) + "," + std::to_string(e.pos.c)}, {"rule", e.rule},
                     {"function", e.after.str()}});
  json j = {{"triple", triple_json(t)},
            {"sequence", o.sequence},
            {"closed_forms", r.closed_forms_checked},
            {"steps", steps},
            {"notes", r.trace.notes},
            {"log", r.log},
            {"seed", seed_json(r.seed)}};
  emit(o, j.dump(2) + "\n");
  return 0;
}

int finish(const Options& o, const VerificationReport& rep) {
  for (const auto& c : rep.checks) {
    std::cerr << c.name << ": " << status_name(c.status) << "\n";
    if (c.status == Status::Fail) std::cerr << "  " << c.details.dump() << "\n";
  }
  emit(o, rep.dump());
  return rep.ok() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  triple_of(o);
  return finish(o, verify(o.n, o.alpha, o.beta, {o.check}, {o.r0_samples, o.seed}));
}

int cmd_report(const Options& o) {
  triple_of(o);
  return finish(o, verify(o.n, o.alpha, o.beta, {"all"}, {o.r0_samples, o.seed}));
}

int cmd_export(const Options& o) {
  if (!o.dot) throw Usage("export needs --dot");
  Seed s = build_initial_seed(triple_of(o));
  emit(o, to_dot(s.quiver));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster structures for minimal Belavin-Drinfeld triples on SL(N)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "matrix size N")->check(CLI::Range(2, kMaxDim));
  app.add_option("--alpha", o.alpha, "source simple root");
  app.add_option("--beta", o.beta, "target simple root");
  app.add_option("--out", o.out, "output file (default: stdout)");
  app.add_option("--r0-samples", o.r0_samples, "sampled r0 class members for compat")->check(CLI::NonNegativeNumber);
  app.add_option("--seed-rng", o.seed, "seed for r0 sampling");

  auto* build = app.add_subcommand("build-seed", "print the initial seed");
  auto* mutate = app.add_subcommand("mutate", "mutate the initial seed once");
  mutate->add_option("--at", o.at, "vertex r,c")->required();
  auto* run = app.add_subcommand("run-sequence", "run the S or T mutation sequence");
  run->add_option("sequence", o.sequence, "S or T")->required()->check(CLI::IsMember({"S", "T"}));
  run->add_option("--m", o.m, "last T stage (default N-1)");
  auto* ver = app.add_subcommand("verify", "run one check, or all");
  std::vector<std::string> checks = check_names();
  checks.push_back("all");
  ver->add_option("check", o.check, "check name")->required()->check(CLI::IsMember(checks));
  auto* exp = app.add_subcommand("export", "export the initial quiver");
  exp->add_flag("--dot", o.dot, "Graphviz DOT output");
  auto* rep = app.add_subcommand("report", "run every check and write the JSON report");
  for (auto* sub : {build, mutate, run, ver, exp, rep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!o.n || !o.alpha || !o.beta) {
    std::cerr << "--n, --alpha and --beta are required\n";
    return 2;
  }

  try {
    if (*build) return cmd_build_seed(o);
    if (*mutate) return cmd_mutate(o);
    if (*run) return cmd_run_sequence(o);
    if (*ver) return cmd_verify(o);
    if (*exp) return cmd_export(o);
    if (*rep) return cmd_report(o);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
