#pragma once

#include "bookem/cnf.hpp"

#include <cstdint>
#include <optional>

namespace bookem {

struct SolveBudget {
  double seconds = 0.0;        // 0 = unlimited
  long long conflicts = 0;     // 0 = unlimited

  static SolveBudget unlimited() { return {}; }
  static SolveBudget time_limit(double s) { return {s, 0}; }
};

struct SolveStats {
  long long decisions = 0;
  long long propagations = 0;
  long long conflicts = 0;
  long long restarts = 0;
  double elapsed_seconds = 0.0;
};

enum class Verdict { Sat, Unsat, Unknown };

const char* to_string(Verdict v);

struct SolveOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<Model> model; // present iff verdict == Sat; re-checked against the formula
  SolveStats stats;
};

// Complete CDCL search (two-watched-literal propagation, first-UIP learning,
// activity decisions with phase saving, Luby restarts). Deterministic for a
// fixed seed. Budget exhaustion yields Unknown.
SolveOutcome solve(const CnfFormula& f, SolveBudget budget = {}, std::uint64_t seed = 0);

} // namespace bookem
