#pragma once

#include "bdcluster/seed.hpp"

#include <map>
#include <string>
#include <vector>

namespace bdc {

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIsolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClosedFormMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceEntry {
  Pos pos;
  int id = -1;
  std::string rule;
  Polynomial before, after;
};

struct Trace {
  std::vector<TraceEntry> steps;
  std::vector<std::string> notes;
};

Quiver mutate_matrix(const Quiver& q, int id);
void mutate_in_place(Seed& s, int id);
Seed mutate_seed(const Seed& s, int id);
// The exchange binomial sum divided into the new function, without modifying the seed.
Polynomial exchange_numerator(const Seed& s, int id);

enum class PlanKind { Sh, Sv, Tm };

struct SequencePlan {
  PlanKind kind = PlanKind::Sh;
  int k = 0;
  std::vector<Pos> path;          // for Sh/Sv the last entry is the terminal vertex
  bool virtual_terminal = false;  // terminal slot has no vertex
};

// Path for sigma_h^(k): starts at (N, N+1-k).
SequencePlan plan_path_h(const Seed& s, int k);
// Path for sigma_v^(k): starts at (N-k, N).
SequencePlan plan_path_v(const Seed& s, int k);
// Columns N..m+1 right to left, each from row N up to row m+1 (m=1 also reaches row 1 in column N).
SequencePlan plan_T(int N, int m);

// Mutate along the path, freeze the last mutated vertex, remove the terminal and shift.
void apply_sigma(Seed& s, const SequencePlan& plan, Trace* trace);

struct SequenceResult {
  Seed seed;
  Trace trace;
  int closed_forms_checked = 0;
  std::vector<std::string> log;
};

// Sequence S on a triple with beta != N-1; verifies each sigma step against its closed forms
// and the final sub-seed against the initial seed of size N-1.
SequenceResult run_sequence_S(const Seed& initial);

// Sequence T_1 ... T_m on the triple (1, N-1), verifying the closed forms after every stage.
SequenceResult run_sequence_T(const Seed& initial, int m);

// Function carried by a vertex shifted to `to` during the h-phase of S; col_glued once its path
// has crossed the line i-j = N-1-alpha.
Polynomial s_target_h(const BDTriple& t, Pos to, bool col_glued, bool jumped = false);
// Expected functions after stage m of the T sequence (nullopt where no closed form is asserted).
std::optional<Polynomial> t_target(const BDTriple& t, int m, Pos p);

}  // namespace bdc
