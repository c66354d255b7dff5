#pragma once

#include <stdexcept>
#include <string>

namespace tradeoff {

// Instance is structurally fine but the requested object does not exist
// (unsatisfiable cover, no feasible subset, ...).
struct Infeasible : std::runtime_error {
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured exact-solver cap. Exact solvers never
// truncate silently; callers either raise the cap or shrink the instance.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed parameters or instances (bad ratio, loops, symbol out of range,
// assignment that does not satisfy the formula it must witness, ...).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Witness builders demand an assignment that actually satisfies the source
// instance.
struct NotSatisfying : InvalidInput {
  explicit NotSatisfying(const std::string& what) : InvalidInput(what) {}
};

// The path gadget has no 1-literal clause variant.
struct UnsupportedClause : InvalidInput {
  explicit UnsupportedClause(const std::string& what) : InvalidInput(what) {}
};

// Instance-generator parameters that make no sense (p outside [0,1], too few
// variables for 3-literal clauses, ...).
struct BadSpec : InvalidInput {
  explicit BadSpec(const std::string& what) : InvalidInput(what) {}
};

// Text-format errors. `line` is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace tradeoff
