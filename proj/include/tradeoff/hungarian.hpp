#pragma once

#include <limits>
#include <vector>

#include "tradeoff/errors.hpp"

namespace tradeoff {

// Min-cost perfect assignment (Hungarian algorithm with potentials, the
// shortest-augmenting-path formulation). cost is square; returns row -> col.
// O(n^3), exact on long long.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<long long>>& cost) {
  int n = (int)cost.size();
  if (n == 0) return {};
  for (const auto& row : cost)
    if ((int)row.size() != n) throw InvalidInput("assignment cost matrix not square");
  const long long INF = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, INF);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      long long delta = INF;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) match[p[j] - 1] = j - 1;
  return match;
}

}  // namespace tradeoff
