#include "bookem/cnf.hpp"

#include <cstdlib>
#include <sstream>

namespace bookem {

void CnfFormula::add_clause(std::vector<int> lits) {
  require(!lits.empty(), ErrorKind::InternalError, "empty clause added at build time");
  for (int lit : lits) {
    int var = std::abs(lit);
    require(var >= 1 && var <= var_count, ErrorKind::InternalError,
            "literal " + std::to_string(lit) + " out of range");
  }
  clauses.push_back(std::move(lits));
}

bool Model::satisfies(const CnfFormula& f) const {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause)
      if (lit_true(lit)) { sat = true; break; }
    if (!sat) return false;
  }
  return true;
}

std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.var_count) + " " +
                    std::to_string(f.clause_count()) + "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool header_seen = false;
  int expected_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, cnf;
      require(bool(hs >> p >> cnf >> f.var_count >> expected_clauses) && cnf == "cnf",
              ErrorKind::BadFormat, "bad DIMACS header");
      header_seen = true;
      continue;
    }
    require(header_seen, ErrorKind::BadFormat, "clause before DIMACS header");
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.add_clause(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  require(header_seen, ErrorKind::BadFormat, "missing DIMACS header");
  require(current.empty(), ErrorKind::BadFormat, "unterminated clause");
  require(f.clause_count() == expected_clauses, ErrorKind::BadFormat,
          "clause count does not match header");
  return f;
}

ParsedOutput parse_solver_output(const std::string& text, int var_count) {
  std::istringstream in(text);
  std::string line;
  ParsedOutput out;
  bool status_seen = false;
  bool values_done = false;
  std::vector<bool> assigned(var_count + 1, false);
  Model model;
  model.value.assign(var_count + 1, false);

  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      require(!status_seen, ErrorKind::MalformedSolverOutput, "duplicate status line");
      status_seen = true;
      std::string status = line.substr(2);
      while (!status.empty() && (status.back() == '\r' || status.back() == ' '))
        status.pop_back();
      if (status == "SATISFIABLE") out.verdict = ParsedVerdict::Sat;
      else if (status == "UNSATISFIABLE") out.verdict = ParsedVerdict::Unsat;
      else if (status == "UNKNOWN" || status == "INDETERMINATE") out.verdict = ParsedVerdict::Unknown;
      else fail(ErrorKind::MalformedSolverOutput, "unrecognized status: " + status);
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      require(!values_done, ErrorKind::MalformedSolverOutput, "values after terminating 0");
      std::istringstream vs(line.substr(1));
      long long lit;
      while (vs >> lit) {
        if (lit == 0) { values_done = true; break; }
        long long var = lit > 0 ? lit : -lit;
        if (var > var_count) continue; // solver-internal auxiliaries
        model.value[static_cast<int>(var)] = lit > 0;
        assigned[static_cast<int>(var)] = true;
      }
    }
  }

  if (!status_seen) return ParsedOutput{ParsedVerdict::Unknown, std::nullopt};
  if (out.verdict == ParsedVerdict::Sat) {
    out.model = std::move(model);
  }
  return out;
}

} // namespace bookem
