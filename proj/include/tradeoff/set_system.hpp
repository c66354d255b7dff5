#pragma once

#include <vector>

#include "tradeoff/bitset.hpp"
#include "tradeoff/errors.hpp"

namespace tradeoff {

// Universe [0, n) plus a family of m subsets, index order significant (the
// merge scheme groups by index).
struct SetSystem {
  int universe = 0;
  std::vector<VertexSet> sets;

  int m() const { return (int)sets.size(); }
};

inline VertexSet union_all(const SetSystem& sys) {
  VertexSet u(sys.universe);
  for (const auto& s : sys.sets) u |= s;
  return u;
}

inline bool is_cover(const SetSystem& sys, const std::vector<int>& chosen) {
  VertexSet u(sys.universe);
  for (int i : chosen) {
    if (i < 0 || i >= sys.m()) throw InvalidInput("set index out of range");
    u |= sys.sets[i];
  }
  return u.count() == sys.universe;
}

}  // namespace tradeoff
