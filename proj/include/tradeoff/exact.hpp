#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "tradeoff/csp.hpp"
#include "tradeoff/enumerate.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/metric.hpp"
#include "tradeoff/set_system.hpp"

namespace tradeoff::exact {

// Exceeding a cap is an error, never a truncated answer: an oracle that can
// lie is worse than no oracle. All caps are per-call configurable.
struct OracleCaps {
  int mis = 24;
  int ids = 40;
  int induced = 20;
  int induced_path = 24;  // path search prunes harder, allow a bit more
  int held_karp = 20;
  int grundy = 18;
  int set_cover = 20;                        // number of sets
  long long csp_assignments = 2'000'000LL;   // s^numVars
};

struct BestSet {
  int size = 0;
  VertexSet vertices;
};

struct Tour {
  std::vector<int> order;
  long long cost = 0;
};

struct GrundyWitness {
  std::vector<VertexSet> classes;  // C_1..C_k, first-fit color classes
};

struct GrundyResult {
  int number = 0;
  GrundyWitness witness;
};

struct CoverResult {
  int size = 0;
  std::vector<int> sets;            // ascending indices
  std::uint64_t enumerated = 0;     // subfamilies inspected
};

struct CspOptimum {
  int violations = 0;
  CspAssignment assignment;
};

namespace detail {
inline void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": instance size " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
}
}  // namespace detail

// ---- max independent set ----
// Branch and bound on the highest-degree candidate vertex. Ties between
// equal-size witnesses go to the lexicographically smallest bitmask, so the
// bound prunes only strictly worse subtrees.
inline BestSet max_independent_set_exact(const Graph& g, const OracleCaps& caps = {}) {
  detail::check_cap(g.n, caps.mis, "max_independent_set_exact");
  BestSet best{-1, VertexSet(g.n)};
  VertexSet cur(g.n);
  auto consider = [&](const VertexSet& s, int size) {
    if (size > best.size || (size == best.size && s.lex_less(best.vertices)))
      best = {size, s};
  };
  auto rec = [&](auto&& self, VertexSet pool, int cur_size) -> void {
    int pool_size = pool.count();
    if (cur_size + pool_size < best.size) return;
    if (pool_size == 0) {
      consider(cur, cur_size);
      return;
    }
    int v = -1, vd = -1;
    pool.for_each([&](int u) {
      int d = (g.adj[u] & pool).count();
      if (d > vd) {
        vd = d;
        v = u;
      }
    });
    VertexSet without = pool;
    without.and_not(g.adj[v]);
    without.reset(v);
    cur.set(v);
    self(self, without, cur_size + 1);
    cur.reset(v);
    pool.reset(v);
    self(self, pool, cur_size);
  };
  rec(rec, g.all_vertices(), 0);
  return best;
}

// ---- min independent dominating set ----
// Enumerates maximal independent sets by branching on the lowest undominated
// vertex; the pruning bound keeps equal-size candidates alive for the
// bitmask tie-break.
inline BestSet min_ids_exact(const Graph& g, const OracleCaps& caps = {}) {
  detail::check_cap(g.n, caps.ids, "min_ids_exact");
  // lexicographic greedy maximal independent set as the initial incumbent
  VertexSet greedy(g.n);
  for (int v = 0; v < g.n; ++v)
    if (!g.adj[v].intersects(greedy)) greedy.set(v);
  BestSet best{greedy.count(), greedy};

  VertexSet cur(g.n), excluded(g.n);
  auto rec = [&](auto&& self, int cur_size) -> void {
    int v = -1;
    for (int u = 0; u < g.n && v == -1; ++u)
      if (!cur.test(u) && !g.adj[u].intersects(cur)) v = u;
    if (v == -1) {
      if (cur_size < best.size || (cur_size == best.size && cur.lex_less(best.vertices)))
        best = {cur_size, cur};
      return;
    }
    if (cur_size + 1 > best.size) return;
    VertexSet cand = g.adj[v];
    cand.set(v);
    cand.and_not(excluded);
    std::vector<int> order;
    cand.for_each([&](int u) {
      if (!g.adj[u].intersects(cur)) order.push_back(u);
    });
    for (int u : order) {
      cur.set(u);
      self(self, cur_size + 1);
      cur.reset(u);
      excluded.set(u);
    }
    for (int u : order) excluded.reset(u);
  };
  rec(rec, 0);
  return best;
}

// ---- max minimal vertex cover ----
// Complement duality: minimal vertex covers are exactly complements of
// maximal independent sets, so the largest one is V minus the smallest
// independent dominating set.
inline BestSet max_minimal_vc_exact(const Graph& g, const OracleCaps& caps = {}) {
  detail::check_cap(g.n, caps.ids, "max_minimal_vc_exact");
  BestSet ids = min_ids_exact(g, caps);
  BestSet out{g.n - ids.size, ids.vertices.complement()};
  if (!is_minimal_vertex_cover(g, out.vertices))
    throw std::logic_error("duality violated: complement of min IDS is not a minimal cover");
  return out;
}

// ---- max induced path / tree / forest ----
// Take/skip over vertex indices. The running set is kept inside a
// downward-closed relaxation (linear forest for paths, forest otherwise), so
// dead subtrees die early; full feasibility is decided at the leaves.
inline BestSet max_induced_exact(const Graph& g, ProblemKind kind, const OracleCaps& caps = {}) {
  if (kind != ProblemKind::InducedPath && kind != ProblemKind::InducedTree &&
      kind != ProblemKind::InducedForest)
    throw InvalidInput("max_induced_exact handles InducedPath/InducedTree/InducedForest");
  int cap = kind == ProblemKind::InducedPath ? caps.induced_path : caps.induced;
  detail::check_cap(g.n, cap, "max_induced_exact");

  BestSet best{-1, VertexSet(g.n)};
  VertexSet cur(g.n);
  auto consider = [&]() {
    if (!is_feasible(g, cur, kind)) return;
    int size = cur.count();
    if (size > best.size || (size == best.size && cur.lex_less(best.vertices)))
      best = {size, cur};
  };
  // adding v must keep cur acyclic (and degree ≤ 2 for paths)
  auto extend_ok = [&](int v) {
    VertexSet nb = g.adj[v] & cur;
    int d = nb.count();
    if (kind == ProblemKind::InducedPath) {
      if (d > 2) return false;
      bool deg_ok = true;
      nb.for_each([&](int u) { deg_ok = deg_ok && (g.adj[u] & cur).count() <= 1; });
      if (!deg_ok) return false;
    }
    if (d <= 1) return true;
    // v joins d attachment points; acyclic iff they sit in d distinct
    // components of g[cur]
    VertexSet rest = cur;
    int comps_touched = 0;
    while (!rest.empty()) {
      VertexSet seen(g.n);
      seen.set(rest.first());
      for (;;) {
        VertexSet fr = neighbors(g, seen);
        fr &= rest;
        fr.and_not(seen);
        if (fr.empty()) break;
        seen |= fr;
      }
      if (seen.intersects(nb)) {
        if ((seen & nb).count() > 1) return false;
        ++comps_touched;
      }
      rest.and_not(seen);
    }
    return comps_touched == d;
  };
  auto rec = [&](auto&& self, int i, int cur_size) -> void {
    if (cur_size + (g.n - i) < best.size) return;
    if (i == g.n) {
      consider();
      return;
    }
    if (extend_ok(i)) {
      cur.set(i);
      self(self, i + 1, cur_size + 1);
      cur.reset(i);
    }
    self(self, i + 1, cur_size);
  };
  rec(rec, 0, 0);
  if (best.size < 0) throw Infeasible("no feasible induced subgraph (empty graph, path/tree)");
  return best;
}

// ---- Held-Karp ----
// Subset DP over (visited set, last city), start fixed at city 0.
inline Tour held_karp(const Metric& metric, const OracleCaps& caps = {}) {
  if (metric.n < 1) throw InvalidInput("held_karp needs n >= 1");
  detail::check_cap(metric.n, caps.held_karp, "held_karp");
  int n = metric.n;
  if (n == 1) return Tour{{0}, 0};
  int m = n - 1;  // cities 1..n-1 live on bits 0..m-1
  const long long INF = std::numeric_limits<long long>::max() / 4;
  std::size_t words = std::size_t(1) << m;
  std::vector<long long> dp(words * m, INF);
  std::vector<signed char> parent(words * m, -1);
  for (int j = 0; j < m; ++j) dp[(std::size_t(1) << j) * m + j] = metric.dist[0][j + 1];
  for (std::uint64_t mask = 1; mask < words; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      long long d = dp[mask * m + j];
      if (d >= INF) continue;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        std::uint64_t nm = mask | (std::uint64_t(1) << k);
        long long nd = d + metric.dist[j + 1][k + 1];
        if (nd < dp[nm * m + k]) {
          dp[nm * m + k] = nd;
          parent[nm * m + k] = (signed char)j;
        }
      }
    }
  }
  std::uint64_t full = words - 1;
  long long best = INF;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    long long c = dp[full * m + j] + metric.dist[j + 1][0];
    if (c < best) {
      best = c;
      last = j;
    }
  }
  std::vector<int> order;
  std::uint64_t mask = full;
  int j = last;
  while (j >= 0) {
    order.push_back(j + 1);
    int p = parent[mask * m + j];
    mask &= ~(std::uint64_t(1) << j);
    j = p;
  }
  order.push_back(0);
  std::vector<int> rev(order.rbegin(), order.rend());
  return Tour{rev, best};
}

// ---- Grundy number ----
// Γ(S) = max over maximal independent sets M of g[S] of 1 + Γ(S∖M), memoized
// over subsets. The witness classes are read back off the memo chain.
inline GrundyResult grundy_exact(const Graph& g, const OracleCaps& caps = {}) {
  detail::check_cap(g.n, caps.grundy, "grundy_exact");
  int n = g.n;
  std::vector<std::uint64_t> adjm(n, 0);
  for (int v = 0; v < n; ++v)
    g.adj[v].for_each([&](int u) { adjm[v] |= std::uint64_t(1) << u; });

  // all maximal independent sets of g[mask], as masks
  auto each_mis = [&](std::uint64_t mask, auto&& fn) {
    std::uint64_t cur = 0, excluded = 0;
    auto rec = [&](auto&& self) -> void {
      std::uint64_t undominated = mask & ~cur;
      std::uint64_t und = 0;
      for (std::uint64_t t = undominated; t; t &= t - 1) {
        int u = std::countr_zero(t);
        if (!(adjm[u] & cur)) {
          und = std::uint64_t(1) << u;
          break;
        }
      }
      if (!und) {
        fn(cur);
        return;
      }
      int v = std::countr_zero(und);
      std::uint64_t cand = (adjm[v] | und) & mask & ~excluded;
      std::uint64_t usable = 0;
      for (std::uint64_t t = cand; t; t &= t - 1) {
        int u = std::countr_zero(t);
        if (!(adjm[u] & cur)) usable |= std::uint64_t(1) << u;
      }
      std::uint64_t added = 0;
      for (std::uint64_t t = usable; t; t &= t - 1) {
        std::uint64_t ub = t & (~t + 1);
        cur |= ub;
        self(self);
        cur &= ~ub;
        excluded |= ub;
        added |= ub;
      }
      excluded &= ~added;
    };
    rec(rec);
  };

  std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> memo;
  auto gr = [&](auto&& self, std::uint64_t mask) -> int {
    if (!mask) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;
    int best = 0;
    std::uint64_t best_class = 0;
    each_mis(mask, [&](std::uint64_t mis) {
      int v = 1 + self(self, mask & ~mis);
      if (v > best || (v == best && mis < best_class)) {
        best = v;
        best_class = mis;
      }
    });
    memo[mask] = {best, best_class};
    return best;
  };
  std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
  GrundyResult out;
  out.number = gr(gr, full);
  std::uint64_t s = full;
  while (s) {
    std::uint64_t cls = memo[s].second;
    VertexSet c(n);
    for (std::uint64_t t = cls; t; t &= t - 1) c.set(std::countr_zero(t));
    out.witness.classes.push_back(c);
    s &= ~cls;
  }
  return out;
}

// First-fit color count on g scanning `order`; also the definitional tool for
// Grundy brute forces in the tests.
inline int first_fit_colors(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(g.n, 0);
  int maxc = 0;
  for (int v : order) {
    std::vector<char> used(g.n + 2, 0);
    g.adj[v].for_each([&](int u) {
      if (color[u]) used[color[u]] = 1;
    });
    int c = 1;
    while (used[c]) ++c;
    color[v] = c;
    if (c > maxc) maxc = c;
  }
  return maxc;
}

// ---- min set cover ----
// Subfamilies in increasing size, bitmask order within a size; the first
// cover found is optimal and lexicographically smallest.
inline CoverResult set_cover_exact(const SetSystem& sys, const OracleCaps& caps = {}) {
  detail::check_cap(sys.m(), caps.set_cover, "set_cover_exact");
  if (union_all(sys).count() != sys.universe)
    throw Infeasible("set system union does not cover the universe");
  CoverResult out;
  for (int k = 0; k <= sys.m(); ++k) {
    bool found = false;
    for_each_subset_of_size(sys.m(), k, [&](const VertexSet& family) {
      if (found) return;
      ++out.enumerated;
      VertexSet covered(sys.universe);
      family.for_each([&](int i) { covered |= sys.sets[i]; });
      if (covered.count() == sys.universe) {
        found = true;
        out.size = k;
        out.sets = family.to_vector();
      }
    });
    if (found) return out;
  }
  throw Infeasible("unreachable: union covers but no subfamily does");
}

// ---- min-violation CSP assignment ----
// Odometer over all s^numVars assignments, variable 0 most significant, so
// the returned argmin is lexicographically smallest.
inline CspOptimum csp_min_unsat(const BinaryCsp& csp, const OracleCaps& caps = {}) {
  long long total = 1;
  for (int i = 0; i < csp.num_vars; ++i) {
    total *= csp.alphabet;
    if (total > caps.csp_assignments)
      throw CapExceeded("csp_min_unsat: s^numVars exceeds cap " +
                        std::to_string(caps.csp_assignments));
  }
  CspAssignment a(csp.num_vars, 0);
  CspOptimum best{(int)csp.edges.size() + 1, {}};
  for (;;) {
    int bad = violation_count(csp, a);
    if (bad < best.violations) best = {bad, a};
    int i = csp.num_vars - 1;
    while (i >= 0 && a[i] == csp.alphabet - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return best;
}

}  // namespace tradeoff::exact
