#include "pnsat/dimacs.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pnsat {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

bool parse_int(const std::string& tok, long& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  out = std::strtol(tok.c_str(), &end, 10);
  return end != nullptr && *end == '\0';
}

}  // namespace

DimacsParseResult parse_dimacs(std::istream& in) {
  DimacsParseResult result;
  CnfFormula& f = result.formula;

  int line_no = 0;
  bool have_header = false;
  long declared_vars = 0;
  bool any_content = false;
  std::vector<Lit> current;
  int clause_start_line = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') continue;

    std::istringstream tokens(line);
    std::string tok;
    if (!have_header) {
      tokens >> tok;
      if (tok.empty()) continue;
      if (tok != "p") throw ParseError(line_no, "expected 'p cnf' header");
      std::string fmt;
      long nvars = -1, nclauses = -1;
      std::string v, c;
      if (!(tokens >> fmt >> v >> c) || fmt != "cnf" || !parse_int(v, nvars) ||
          !parse_int(c, nclauses) || nvars < 0 || nclauses < 0 ||
          (tokens >> tok))
        throw ParseError(line_no, "malformed header: " + line);
      declared_vars = nvars;
      f.num_vars = static_cast<int>(nvars);
      have_header = true;
      any_content = true;
      continue;
    }

    while (tokens >> tok) {
      long v;
      if (!parse_int(tok, v))
        throw ParseError(line_no, "expected integer literal, got '" + tok + "'");
      any_content = true;
      if (v == 0) {
        if (normalize_clause(current)) {
          ++result.dropped_tautologies;
        } else {
          f.clauses.push_back(Clause{std::move(current), false});
        }
        current.clear();
        clause_start_line = 0;
        continue;
      }
      if (v > declared_vars || -v > declared_vars)
        throw ParseError(line_no, "literal " + std::to_string(v) +
                                      " exceeds declared variable count " +
                                      std::to_string(declared_vars));
      if (current.empty()) clause_start_line = line_no;
      current.push_back(Lit::from_dimacs(static_cast<int>(v)));
    }
  }

  if (!any_content) throw ParseError(line_no, "empty input");
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty())
    throw ParseError(clause_start_line, "clause missing terminating 0");
  return result;
}

DimacsParseResult parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace pnsat
