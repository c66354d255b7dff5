#pragma once

#include <cstdint>
#include <vector>

#include "tradeoff/graph.hpp"

namespace tradeoff {

// C(n, k) — exact for n ≤ 64, which covers every enumeration budget here.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (unsigned)(n - k + i) / (unsigned)i;
  return (std::uint64_t)r;
}

inline std::uint64_t subset_count_up_to(int n, int k) {
  std::uint64_t total = 0;
  for (int j = 0; j <= k && j <= n; ++j) total += binomial(n, j);
  return total;
}

// All k-subsets of [0, n) in increasing bitmask-value order (colex). The
// visitor gets a reused buffer; copy it if you keep it.
template <class F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  VertexSet buf(n);
  if (k == 0) {
    f(static_cast<const VertexSet&>(buf));
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    buf.clear();
    for (int i : idx) buf.set(i);
    f(static_cast<const VertexSet&>(buf));
    // colex successor: bump the lowest position that has room, reset the ones
    // below it.
    int t = 0;
    while (t < k && idx[t] + 1 == (t + 1 < k ? idx[t + 1] : n)) ++t;
    if (t == k) return;
    ++idx[t];
    for (int s = 0; s < t; ++s) idx[s] = s;
  }
}

// Sizes 0..k, each size in bitmask order: the canonical deterministic order
// for every budgeted enumeration in the schemes.
template <class F>
void for_each_subset_up_to(int n, int k, F&& f) {
  for (int j = 0; j <= k && j <= n; ++j) for_each_subset_of_size(n, j, f);
}

// Every independent S ⊆ within, each exactly once (∅ included). Take/skip
// branching per vertex; the take branch is pruned on adjacency.
template <class F>
void for_each_independent_subset(const Graph& g, const VertexSet& within, F&& f) {
  std::vector<int> verts = within.to_vector();
  VertexSet cur(g.n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == verts.size()) {
      f(static_cast<const VertexSet&>(cur));
      return;
    }
    self(self, i + 1);
    int v = verts[i];
    if (!g.adj[v].intersects(cur)) {
      cur.set(v);
      self(self, i + 1);
      cur.reset(v);
    }
  };
  rec(rec, 0);
}

// Every maximal independent set of g[within], each exactly once. Branches on
// the lowest not-yet-dominated vertex over its closed neighborhood; the
// exclusion set kills revisits of sets already produced on earlier branches.
template <class F>
void for_each_maximal_independent_set(const Graph& g, const VertexSet& within, F&& f) {
  VertexSet cur(g.n), excluded(g.n);
  auto rec = [&](auto&& self) -> void {
    int v = -1;
    within.for_each([&](int u) {
      if (v == -1 && !cur.test(u) && !g.adj[u].intersects(cur)) v = u;
    });
    if (v == -1) {
      f(static_cast<const VertexSet&>(cur));
      return;
    }
    VertexSet cand = g.adj[v] & within;
    cand.set(v);
    cand.and_not(excluded);
    std::vector<int> order;
    cand.for_each([&](int u) {
      if (!g.adj[u].intersects(cur)) order.push_back(u);
    });
    for (int u : order) {
      cur.set(u);
      self(self);
      cur.reset(u);
      excluded.set(u);
    }
    for (int u : order) excluded.reset(u);
  };
  rec(rec);
}

}  // namespace tradeoff
