#pragma once

#include "bookem/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bookem {

// Clause database over variables 1..var_count; literals are nonzero signed ints.
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;

  void add_clause(std::vector<int> lits);
  int clause_count() const { return static_cast<int>(clauses.size()); }
};

// Total assignment over 1..var_count (index 0 unused).
struct Model {
  std::vector<bool> value;

  bool operator[](int var) const { return value[var]; }
  bool lit_true(int lit) const { return lit > 0 ? value[lit] : !value[-lit]; }
  bool satisfies(const CnfFormula& f) const;
};

std::string to_dimacs(const CnfFormula& f);
CnfFormula parse_dimacs(const std::string& text);

enum class ParsedVerdict { Sat, Unsat, Unknown };

struct ParsedOutput {
  ParsedVerdict verdict = ParsedVerdict::Unknown;
  std::optional<Model> model;
};

// Reads the standard conventions: an "s SATISFIABLE"/"s UNSATISFIABLE" status
// line and 0-terminated "v " value lines. Anything else on a line is ignored.
// Variables not mentioned default to false. Throws MalformedSolverOutput when
// a status line is present but inconsistent or the value lines are broken.
ParsedOutput parse_solver_output(const std::string& text, int var_count);

} // namespace bookem
