#pragma once

#include <utility>
#include <vector>

#include "tradeoff/bitset.hpp"
#include "tradeoff/errors.hpp"

namespace tradeoff {

// Undirected simple graph, adjacency as per-vertex bitsets. Vertices are
// 0-based everywhere in memory; file formats are 1-based.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_, VertexSet(n_)) {}

  void add_edge(int u, int v) {
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge endpoint out of range");
    adj[u].set(v);
    adj[v].set(u);
  }

  bool has_edge(int u, int v) const { return adj[u].test(v); }

  int edge_count() const {
    int twice = 0;
    for (const auto& a : adj) twice += a.count();
    return twice / 2;
  }

  // u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      adj[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet all_vertices() const {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }
};

// Open neighborhood: union of adjacency over s, minus s itself.
inline VertexSet neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out(g.n);
  s.for_each([&](int v) { out |= g.adj[v]; });
  out.and_not(s);
  return out;
}

// Greedy over edges in lexicographic (u, v) order; an edge enters the
// matching iff both endpoints are still free.
inline std::vector<std::pair<int, int>> maximal_matching(const Graph& g) {
  std::vector<std::pair<int, int>> m;
  VertexSet used(g.n);
  for (int u = 0; u < g.n; ++u) {
    if (used.test(u)) continue;
    int v = -1;
    g.adj[u].for_each([&](int w) {
      if (v < 0 && w > u && !used.test(w)) v = w;
    });
    if (v >= 0) {
      m.emplace_back(u, v);
      used.set(u);
      used.set(v);
    }
  }
  return m;
}

// g[keep] with vertices renumbered ascending; back (if given) maps new
// indices to originals.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                              std::vector<int>* back = nullptr) {
  std::vector<int> orig = keep.to_vector();
  std::vector<int> to_new(g.n, -1);
  for (std::size_t i = 0; i < orig.size(); ++i) to_new[orig[i]] = (int)i;
  Graph h((int)orig.size());
  for (int u : orig)
    (g.adj[u] & keep).for_each([&](int v) {
      if (u < v) h.add_edge(to_new[u], to_new[v]);
    });
  if (back) *back = std::move(orig);
  return h;
}

// ---- feasibility predicates ----

enum class ProblemKind {
  IndependentSet,
  IndependentDominatingSet,
  MinimalVertexCover,
  InducedPath,
  InducedTree,
  InducedForest,
};

inline bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.adj[v].intersects(s); });
  return ok;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  for (int v = 0; v < g.n; ++v)
    if (!s.test(v) && !g.adj[v].intersects(s)) return false;
  return true;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  // s covers every edge iff V \ s is independent.
  return is_independent(g, s.complement());
}

inline bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s) {
  if (!is_vertex_cover(g, s)) return false;
  bool minimal = true;
  s.for_each([&](int v) { minimal = minimal && !g.adj[v].is_subset_of(s); });
  return minimal;
}

inline bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_dominating(g, s);
}

inline int induced_edge_count(const Graph& g, const VertexSet& s) {
  int twice = 0;
  s.for_each([&](int v) { twice += (g.adj[v] & s).count(); });
  return twice / 2;
}

inline int induced_max_degree(const Graph& g, const VertexSet& s) {
  int d = 0;
  s.for_each([&](int v) {
    int dv = (g.adj[v] & s).count();
    if (dv > d) d = dv;
  });
  return d;
}

inline bool induced_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  VertexSet seen(g.n);
  seen.set(s.first());
  for (;;) {
    VertexSet frontier = neighbors(g, seen);
    frontier &= s;
    frontier.and_not(seen);
    if (frontier.empty()) break;
    seen |= frontier;
  }
  return seen.count() == s.count();
}

inline int induced_component_count(const Graph& g, const VertexSet& s) {
  VertexSet rest = s;
  int c = 0;
  while (!rest.empty()) {
    ++c;
    VertexSet seen(g.n);
    seen.set(rest.first());
    for (;;) {
      VertexSet frontier = neighbors(g, seen);
      frontier &= rest;
      frontier.and_not(seen);
      if (frontier.empty()) break;
      seen |= frontier;
    }
    rest.and_not(seen);
  }
  return c;
}

inline bool induced_acyclic(const Graph& g, const VertexSet& s) {
  return induced_edge_count(g, s) == s.count() - induced_component_count(g, s);
}

// Empty set: infeasible as a path or tree (a degenerate path/tree is a single
// vertex), feasible as a forest. Keeps one-element removal inside the
// feasible region down to the smallest solutions.
inline bool is_feasible(const Graph& g, const VertexSet& s, ProblemKind problem) {
  switch (problem) {
    case ProblemKind::IndependentSet:
      return is_independent(g, s);
    case ProblemKind::IndependentDominatingSet:
      return is_independent(g, s) && is_dominating(g, s);
    case ProblemKind::MinimalVertexCover:
      return is_minimal_vertex_cover(g, s);
    case ProblemKind::InducedPath: {
      int k = s.count();
      return k >= 1 && induced_edge_count(g, s) == k - 1 &&
             induced_max_degree(g, s) <= 2 && induced_connected(g, s);
    }
    case ProblemKind::InducedTree: {
      int k = s.count();
      return k >= 1 && induced_edge_count(g, s) == k - 1 && induced_connected(g, s);
    }
    case ProblemKind::InducedForest:
      return induced_acyclic(g, s);
  }
  return false;
}

}  // namespace tradeoff
