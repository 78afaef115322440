#pragma once

#include "bdcluster/certify.hpp"
#include "bdcluster/sklyanin.hpp"
#include "bdcluster/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bdc {

inline constexpr const char* kReportSchema = "bdcluster.report/1";
inline constexpr const char* kSignConvention = "+";
inline constexpr const char* kMonomialOrder = "grlex, x11 > x12 > ... > xNN";

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Skipped;
  nlohmann::json details = nlohmann::json::object();
};

struct ReportOptions {
  int r0_samples = 5;
  std::uint32_t rng_seed = 1;
};

struct VerificationReport {
  int input_alpha = 0, input_beta = 0;
  BDTriple triple;
  ReportOptions options;
  std::vector<Check> checks;  // sorted by name

  bool ok() const;  // no check failed
  nlohmann::json to_json() const;
  std::string dump() const;  // two-space indented, trailing newline
};

std::string rational(const mpq_class& q);

// Names accepted by run_check, sorted.
const std::vector<std::string>& check_names();

Check check_rank(const Seed& s);
Check check_compat(const Seed& s, const ReportOptions& opt);
Check check_toric(const Seed& s);
Check check_laurent(const Seed& s);
Check check_sequences(const Seed& s);
Check check_membership(const BDTriple& t);
Check run_check(const std::string& name, const Seed& s, const ReportOptions& opt);

// Mutable vertices whose exchange binomial is not divisible by the current function.
std::vector<Pos> local_regularity_failures(const Seed& s);

// Canonicalizes (N, alpha, beta) and runs the named checks; "all" expands to every check.
VerificationReport verify(int N, int alpha, int beta, const std::vector<std::string>& names,
                          const ReportOptions& opt = {});

nlohmann::json seed_json(const Seed& s);
nlohmann::json triple_json(const BDTriple& t);

}  // namespace bdc
