#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tradeoff/errors.hpp"

namespace tradeoff {

// One constraint of a binary CSP: the ordered pairs (value at u, value at v)
// the edge accepts. An empty allowed list is a constraint nothing satisfies.
struct CspEdge {
  int u = 0;
  int v = 0;
  std::vector<std::pair<int, int>> allowed;
};

struct BinaryCsp {
  int num_vars = 0;
  int alphabet = 0;  // s = |Σ|, symbols are 0..s-1
  std::vector<CspEdge> edges;
};

// Symbol per variable, 0..s-1.
using CspAssignment = std::vector<int>;

inline void validate(const BinaryCsp& csp) {
  if (csp.num_vars < 0 || csp.alphabet < 1)
    throw InvalidInput("csp needs numVars >= 0 and alphabet >= 1");
  std::vector<std::pair<int, int>> seen;
  for (const CspEdge& e : csp.edges) {
    if (e.u == e.v) throw InvalidInput("csp edge with u == v");
    if (e.u < 0 || e.v < 0 || e.u >= csp.num_vars || e.v >= csp.num_vars)
      throw InvalidInput("csp edge endpoint out of range");
    auto key = std::minmax(e.u, e.v);
    for (auto& s : seen)
      if (s == std::pair<int, int>(key.first, key.second))
        throw InvalidInput("duplicate csp edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v));
    seen.emplace_back(key.first, key.second);
    for (std::size_t i = 0; i < e.allowed.size(); ++i) {
      auto [a, b] = e.allowed[i];
      if (a < 0 || b < 0 || a >= csp.alphabet || b >= csp.alphabet)
        throw InvalidInput("allowed pair symbol out of range");
      for (std::size_t j = i + 1; j < e.allowed.size(); ++j)
        if (e.allowed[j] == e.allowed[i]) throw InvalidInput("duplicate allowed pair");
    }
  }
}

inline bool edge_satisfied(const CspEdge& e, const CspAssignment& a) {
  for (auto [x, y] : e.allowed)
    if (a[e.u] == x && a[e.v] == y) return true;
  return false;
}

inline int violation_count(const BinaryCsp& csp, const CspAssignment& a) {
  if ((int)a.size() != csp.num_vars)
    throw InvalidInput("assignment length != variable count");
  int bad = 0;
  for (const CspEdge& e : csp.edges)
    if (!edge_satisfied(e, a)) ++bad;
  return bad;
}

inline bool satisfies(const BinaryCsp& csp, const CspAssignment& a) {
  return violation_count(csp, a) == 0;
}

}  // namespace tradeoff
