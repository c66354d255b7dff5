#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/cnf.hpp"
#include "tradeoff/csp.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/metric.hpp"
#include "tradeoff/rng.hpp"
#include "tradeoff/set_system.hpp"

namespace tradeoff::gen {

// Every generator consumes its Rng in a fixed documented order, so a seed
// pins the instance byte for byte.

enum class Kind { kGraph, kCnf, kCsp, kMetric, kSetSystem };

struct InstanceSpec {
  Kind kind = Kind::kGraph;
  int n = 0;           // vertices / variables / cities / universe size
  int m = 0;           // clauses / CSP edges / sets
  double p = 0.5;      // G(n,p) edge probability
  int alphabet = 2;    // CSP alphabet size
  std::uint64_t seed = 0;
};

// G(n,p): one unit draw per pair (u,v), u < v, ascending lexicographically.
inline Graph generate_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw BadSpec("graph size must be >= 0");
  if (p < 0.0 || p > 1.0) throw BadSpec("edge probability must be in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

// Random integer weights in [1,100] drawn row-major over i != j, then
// shortest-path closure, which enforces the triangle inequality.
inline Metric generate_metric(int n, std::uint64_t seed) {
  if (n < 0) throw BadSpec("metric size must be >= 0");
  Rng rng(seed);
  Metric m;
  m.n = n;
  m.dist.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.dist[i][j] = (long long)rng.range(1, 100);
  return metric_closure(std::move(m));
}

// Uniform 3-SAT: per clause, rejection-sample variables (draws of below(n))
// until three are distinct, then one below(2) draw per literal for its sign.
inline CnfFormula generate_cnf(int num_vars, int num_clauses, std::uint64_t seed) {
  if (num_vars < 3) throw BadSpec("3-SAT needs at least 3 variables");
  if (num_clauses < 0) throw BadSpec("clause count must be >= 0");
  Rng rng(seed);
  CnfFormula phi;
  phi.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    int vars[3];
    for (int t = 0; t < 3; ++t) {
      bool fresh = false;
      while (!fresh) {
        vars[t] = (int)rng.below((std::uint64_t)num_vars);
        fresh = true;
        for (int s = 0; s < t; ++s)
          if (vars[s] == vars[t]) fresh = false;
      }
    }
    Clause clause;
    for (int t = 0; t < 3; ++t) {
      bool negate = rng.below(2) == 1;
      clause.lits.push_back(negate ? -(vars[t] + 1) : vars[t] + 1);
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

// Random binary CSP: edges are rejection-sampled distinct unordered pairs
// (two below(n) draws per attempt); then per edge each of the s*s value pairs
// is allowed on a below(2) coin, scanned in row-major order.
inline BinaryCsp generate_csp(int num_vars, int alphabet, int num_edges, std::uint64_t seed) {
  if (num_vars < 0 || alphabet < 1) throw BadSpec("need num_vars >= 0 and alphabet >= 1");
  long long max_edges = (long long)num_vars * (num_vars - 1) / 2;
  if (num_edges < 0 || num_edges > max_edges) throw BadSpec("edge count out of range");
  Rng rng(seed);
  BinaryCsp csp;
  csp.num_vars = num_vars;
  csp.alphabet = alphabet;
  std::vector<std::vector<char>> used(num_vars, std::vector<char>(num_vars, 0));
  for (int e = 0; e < num_edges; ++e) {
    int u = 0, v = 0;
    do {
      u = (int)rng.below((std::uint64_t)num_vars);
      v = (int)rng.below((std::uint64_t)num_vars);
    } while (u == v || used[u][v]);
    used[u][v] = used[v][u] = 1;
    CspEdge edge;
    edge.u = u;
    edge.v = v;
    for (int a = 0; a < alphabet; ++a)
      for (int b = 0; b < alphabet; ++b)
        if (rng.below(2) == 1) edge.allowed.emplace_back(a, b);
    csp.edges.push_back(std::move(edge));
  }
  return csp;
}

// Random subsets (one below(2) draw per set x element, sets outermost), then
// a planted cover: every element joins a below(m) random set, so the union
// always covers the universe.
inline SetSystem generate_set_system(int universe, int num_sets, std::uint64_t seed) {
  if (universe < 0) throw BadSpec("universe size must be >= 0");
  if (num_sets < 1) throw BadSpec("need at least one set");
  Rng rng(seed);
  SetSystem sys;
  sys.universe = universe;
  for (int s = 0; s < num_sets; ++s) {
    VertexSet set(universe);
    for (int e = 0; e < universe; ++e)
      if (rng.below(2) == 1) set.set(e);
    sys.sets.push_back(std::move(set));
  }
  for (int e = 0; e < universe; ++e)
    sys.sets[(int)rng.below((std::uint64_t)num_sets)].set(e);
  return sys;
}

}  // namespace tradeoff::gen
