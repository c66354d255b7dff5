#pragma once

#include <string>
#include <vector>

#include "tradeoff/errors.hpp"

namespace tradeoff {

// Asymmetric distance matrix. Distances are integers: every ratio check in
// the test suites is exact arithmetic, no float tolerance.
struct Metric {
  int n = 0;
  std::vector<std::vector<long long>> dist;
  bool triangle_checked = false;

  Metric() = default;
  explicit Metric(int n_) : n(n_), dist(n_, std::vector<long long>(n_, 0)) {}
};

inline void validate_shape(const Metric& m) {
  if ((int)m.dist.size() != m.n) throw InvalidInput("metric row count != n");
  for (int i = 0; i < m.n; ++i) {
    if ((int)m.dist[i].size() != m.n) throw InvalidInput("metric row length != n");
    if (m.dist[i][i] != 0) throw InvalidInput("metric diagonal must be 0");
    for (long long d : m.dist[i])
      if (d < 0) throw InvalidInput("negative distance");
  }
}

inline bool triangle_holds(const Metric& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      for (int k = 0; k < m.n; ++k)
        if (m.dist[i][k] > m.dist[i][j] + m.dist[j][k]) return false;
  return true;
}

// Floyd-Warshall closure; the cheap way to make any nonnegative matrix
// satisfy the triangle inequality.
inline Metric metric_closure(Metric m) {
  validate_shape(m);
  for (int k = 0; k < m.n; ++k)
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        if (m.dist[i][k] + m.dist[k][j] < m.dist[i][j])
          m.dist[i][j] = m.dist[i][k] + m.dist[k][j];
  m.triangle_checked = true;
  return m;
}

inline long long tour_cost(const Metric& m, const std::vector<int>& order) {
  if (order.empty()) return 0;
  long long c = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) c += m.dist[order[i]][order[i + 1]];
  c += m.dist[order.back()][order.front()];
  return c;
}

}  // namespace tradeoff
