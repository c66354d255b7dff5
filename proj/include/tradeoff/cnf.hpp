#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "tradeoff/errors.hpp"

namespace tradeoff {

// CNF clause: signed 1-based variable indices, DIMACS style. -3 is the
// negation of variable 3.
struct Clause {
  std::vector<int> lits;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// Truth assignment indexed by 0-based variable; values 0/1.
using BoolAssignment = std::vector<char>;

inline void validate(const CnfFormula& phi) {
  for (const Clause& c : phi.clauses) {
    if (c.lits.empty() || c.lits.size() > 3)
      throw InvalidInput("clause size must be 1..3, got " + std::to_string(c.lits.size()));
    for (std::size_t i = 0; i < c.lits.size(); ++i) {
      int lit = c.lits[i];
      if (lit == 0 || std::abs(lit) > phi.num_vars)
        throw InvalidInput("literal out of range: " + std::to_string(lit));
      for (std::size_t j = i + 1; j < c.lits.size(); ++j)
        if (std::abs(c.lits[j]) == std::abs(lit))
          throw InvalidInput("clause repeats variable " + std::to_string(std::abs(lit)));
    }
  }
}

inline bool clause_satisfied(const Clause& c, const BoolAssignment& tau) {
  for (int lit : c.lits) {
    bool val = tau[std::abs(lit) - 1];
    if ((lit > 0) == val) return true;
  }
  return false;
}

inline bool satisfies(const CnfFormula& phi, const BoolAssignment& tau) {
  if ((int)tau.size() != phi.num_vars)
    throw InvalidInput("assignment length != variable count");
  for (const Clause& c : phi.clauses)
    if (!clause_satisfied(c, tau)) return false;
  return true;
}

}  // namespace tradeoff
