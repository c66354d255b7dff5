#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tradeoff/enumerate.hpp"
#include "tradeoff/exact.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/hungarian.hpp"
#include "tradeoff/metric.hpp"
#include "tradeoff/set_system.hpp"

namespace tradeoff::schemes {

using exact::CoverResult;
using exact::OracleCaps;
using exact::Tour;

// Knobs a caller tunes to trade running time against solution quality.
struct TradeParams {
  double r = 2.0;     // target ratio for the subset-budget schemes
  int rho = 2;        // integer group count for the matching-based MMVC scheme
  double delta = 0.5; // exponent for the set-cover pipeline
};

// Every scheme returns its solution together with the ratio it actually
// certifies for this instance. `guarantee` is a promise, not a measurement:
// opt is never consulted.
template <class Solution>
struct Report {
  long long value = 0;
  Solution solution{};
  double guarantee = 1.0;
  std::uint64_t nodes_enumerated = 0;
  double wall_time_ms = 0.0;
  std::string note;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline double clamp_ratio(double r, int n, std::string& note) {
  double hi = n < 1 ? 1.0 : double(n);
  double eff = r;
  if (eff < 1.0) eff = 1.0;
  if (eff > hi) eff = hi;
  if (eff != r) note += "r clamped from " + std::to_string(r) + " to " + std::to_string(eff) + "; ";
  return eff;
}

inline int ceil_log2(double r) {
  int t = 0;
  double p = 1.0;
  while (p < r - 1e-12) {
    p *= 2.0;
    ++t;
  }
  return t;
}

}  // namespace detail

// ---- generic budgeted enumeration (minimization) ----
// Tries every subset of size ≤ ⌊n/r⌋; if none is feasible, the optimum is
// provably larger than the budget and the polynomial fallback (lexicographic
// greedy maximal independent set) is already within ratio r. Enumeration
// never stops early: nodes_enumerated must equal the closed-form subset
// count.
inline Report<VertexSet> generic_min_scheme(const Graph& g, ProblemKind problem, double r) {
  if (problem != ProblemKind::IndependentDominatingSet)
    throw InvalidInput("generic_min_scheme handles IndependentDominatingSet");
  detail::Stopwatch clock;
  Report<VertexSet> rep;
  rep.solution = VertexSet(g.n);
  if (g.n == 0) {
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  double r_eff = detail::clamp_ratio(r, g.n, rep.note);
  int budget = (int)(double(g.n) / r_eff + 1e-9);
  int best = g.n + 1;
  VertexSet best_set(g.n);
  for_each_subset_up_to(g.n, budget, [&](const VertexSet& s) {
    ++rep.nodes_enumerated;
    if (best <= budget) return;  // already optimal; keep counting nodes
    if (is_feasible(g, s, problem)) {
      best = s.count();
      best_set = s;
    }
  });
  if (best > budget) {
    VertexSet greedy(g.n);
    for (int v = 0; v < g.n; ++v)
      if (!g.adj[v].intersects(greedy)) greedy.set(v);
    best_set = greedy;
    best = greedy.count();
    rep.note += "fallback: greedy maximal independent set; ";
  }
  rep.value = best;
  rep.solution = best_set;
  rep.guarantee = r_eff;
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- generic budgeted enumeration (maximization) ----
// Weak monotonicity makes the best subset of size ≤ ⌊n/r⌋ worth exactly
// min(opt, ⌊n/r⌋). That certifies opt ≤ value·n/⌊n/r⌋, which for fractional
// n/r is slightly weaker than r; the reported guarantee is the certified
// bound.
inline Report<VertexSet> generic_max_scheme(const Graph& g, ProblemKind problem, double r) {
  if (problem != ProblemKind::InducedPath && problem != ProblemKind::InducedTree &&
      problem != ProblemKind::InducedForest)
    throw InvalidInput("generic_max_scheme handles InducedPath/InducedTree/InducedForest");
  detail::Stopwatch clock;
  Report<VertexSet> rep;
  rep.solution = VertexSet(g.n);
  if (g.n == 0) {
    if (problem != ProblemKind::InducedForest)
      throw Infeasible("no induced path/tree in the empty graph");
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  double r_eff = detail::clamp_ratio(r, g.n, rep.note);
  int budget = (int)(double(g.n) / r_eff + 1e-9);
  int best = -1;
  VertexSet best_set(g.n);
  for_each_subset_up_to(g.n, budget, [&](const VertexSet& s) {
    ++rep.nodes_enumerated;
    if (s.count() > best && is_feasible(g, s, problem)) {
      best = s.count();
      best_set = s;
    }
  });
  rep.value = best;  // singleton always feasible, so best ≥ 1 here
  rep.solution = best_set;
  rep.guarantee = std::max(r_eff, double(g.n) / double(budget));
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- block partition for strongly monotone problems ----
// Independence survives arbitrary subsets, so restricting an optimal solution
// to the largest of r blocks keeps ≥ opt/r vertices: solving each block
// exactly is an r-approximation in O*(2^{n/r}).
inline Report<VertexSet> partition_scheme_mis(const Graph& g, int r,
                                              const OracleCaps& caps = {}) {
  if (r < 1) throw InvalidInput("partition_scheme_mis needs r >= 1");
  detail::Stopwatch clock;
  Report<VertexSet> rep;
  rep.solution = VertexSet(g.n);
  if (g.n == 0) {
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  int r_eff = r;
  if (r_eff > g.n) {
    r_eff = g.n;
    rep.note += "r clamped to n=" + std::to_string(g.n) + "; ";
  }
  int base = g.n / r_eff, extra = g.n % r_eff;
  if (base + (extra ? 1 : 0) > caps.mis)
    throw CapExceeded("partition block size exceeds independent-set cap");
  int best = -1;
  VertexSet best_set(g.n);
  int start = 0;
  for (int b = 0; b < r_eff; ++b) {
    int len = base + (b < extra ? 1 : 0);
    VertexSet block(g.n);
    for (int v = start; v < start + len; ++v) block.set(v);
    start += len;
    std::vector<int> back;
    Graph h = induced_subgraph(g, block, &back);
    exact::BestSet sub = exact::max_independent_set_exact(h, caps);
    ++rep.nodes_enumerated;
    if (sub.size > best) {
      best = sub.size;
      best_set = VertexSet(g.n);
      sub.vertices.for_each([&](int v) { best_set.set(back[v]); });
    }
  }
  rep.value = best;
  rep.solution = best_set;
  rep.guarantee = double(r_eff);
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- minimal vertex cover extension ----
// Start from V∖independent and sweep v = 0..n-1 once, dropping v when all its
// neighbors are covered. Removals only shrink the cover, so survivors keep
// their outside neighbor: the single pass already ends minimal.
inline VertexSet extend_to_minimal_vc(const Graph& g, const VertexSet& independent) {
  if (!is_independent(g, independent))
    throw InvalidInput("extend_to_minimal_vc needs an independent set");
  VertexSet cover = independent.complement();
  for (int v = 0; v < g.n; ++v)
    if (cover.test(v) && g.adj[v].is_subset_of(cover)) cover.reset(v);
  return cover;
}

// ---- max minimal vertex cover ----
// Matching-based scheme. A fat maximal matching forces every minimal cover to
// be large; a thin one leaves few matched vertices, and enumerating
// independent seeds inside one matched group recovers a cover within
// ratio rho.
inline Report<VertexSet> mmvc_scheme(const Graph& g, int rho) {
  if (rho < 1) throw InvalidInput("mmvc_scheme needs rho >= 1");
  detail::Stopwatch clock;
  Report<VertexSet> rep;
  rep.solution = VertexSet(g.n);
  if (g.n == 0) {
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  int rho_max = (int)std::sqrt((double)g.n);
  while ((rho_max + 1) * (rho_max + 1) <= g.n) ++rho_max;  // guard fp edge
  while (rho_max > 1 && rho_max * rho_max > g.n) --rho_max;
  int rho_eff = rho;
  if (rho_eff > rho_max) {
    rho_eff = rho_max;
    rep.note += "rho clamped to floor(sqrt(n))=" + std::to_string(rho_max) + "; ";
  }
  auto matching = maximal_matching(g);
  VertexSet matched(g.n);
  for (auto [u, v] : matching) {
    matched.set(u);
    matched.set(v);
  }
  if ((long long)matching.size() * rho_eff >= g.n) {
    // any minimal cover already has ≥ |M| ≥ n/rho vertices
    VertexSet cover = extend_to_minimal_vc(g, VertexSet(g.n));
    rep.value = cover.count();
    rep.solution = cover;
    rep.guarantee = double(rho_eff);
    rep.note += "large-matching branch; ";
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  VertexSet unmatched = matched.complement();
  int best = -1;
  VertexSet best_set(g.n);
  for (int i = 0; i < rho_eff; ++i) {
    VertexSet group(g.n);
    for (std::size_t t = i; t < matching.size(); t += rho_eff) {
      group.set(matching[t].first);
      group.set(matching[t].second);
    }
    for_each_independent_subset(g, group, [&](const VertexSet& s) {
      ++rep.nodes_enumerated;
      VertexSet seed = unmatched;
      seed.and_not(neighbors(g, s));
      seed |= s;
      VertexSet cover = extend_to_minimal_vc(g, seed);
      int size = cover.count();
      if (size > best || (size == best && cover.lex_less(best_set))) {
        best = size;
        best_set = cover;
      }
    });
  }
  rep.value = best;
  rep.solution = best_set;
  rep.guarantee = double(rho_eff);
  rep.note += "group-enumeration branch; ";
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- minimum-weight cycle cover ----
struct CycleCover {
  std::vector<std::vector<int>> circuits;  // each starts at its lowest vertex
  long long cost = 0;
};

// Assignment relaxation of ATSP: choosing a successor for every city under a
// forbidden diagonal yields vertex-disjoint circuits of total weight ≤ the
// optimal tour (a tour is one particular assignment).
inline CycleCover min_weight_cycle_cover(const Metric& metric) {
  if (metric.n < 2) throw InvalidInput("cycle cover needs n >= 2");
  const long long FORBID = 1'000'000'000'000'000LL;
  std::vector<std::vector<long long>> cost(metric.n, std::vector<long long>(metric.n));
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j) cost[i][j] = i == j ? FORBID : metric.dist[i][j];
  std::vector<int> succ = min_cost_assignment(cost);
  CycleCover out;
  std::vector<char> seen(metric.n, 0);
  for (int v = 0; v < metric.n; ++v) {
    if (seen[v]) continue;
    std::vector<int> circuit;
    int u = v;
    do {
      if (u == succ[u]) throw std::logic_error("cycle cover picked a forbidden self-loop");
      circuit.push_back(u);
      seen[u] = 1;
      out.cost += metric.dist[u][succ[u]];
      u = succ[u];
    } while (u != v);
    out.circuits.push_back(std::move(circuit));
  }
  return out;
}

// ---- ATSP trade-off scheme ----
// Repeated cycle cover: keep one representative per circuit (its lowest
// vertex), recurse on the representatives, then splice each circuit into the
// representative tour. Circuits at least halve per round, so ⌈log₂ r⌉ rounds
// reach the Held-Karp base case of size max(2, ⌈n/r⌉); each round adds at
// most opt to the cost.
inline Report<Tour> atsp_scheme(const Metric& metric, double r, const OracleCaps& caps = {}) {
  if (metric.n < 1) throw InvalidInput("atsp_scheme needs n >= 1");
  validate_shape(metric);
  if (!metric.triangle_checked && !triangle_holds(metric))
    throw InvalidInput("metric violates the triangle inequality; close it first");
  detail::Stopwatch clock;
  Report<Tour> rep;
  double r_eff = detail::clamp_ratio(r, metric.n, rep.note);
  int threshold = std::max(2, (int)std::ceil(double(metric.n) / r_eff - 1e-12));
  if (threshold > caps.held_karp)
    throw CapExceeded("atsp base case " + std::to_string(threshold) +
                      " exceeds Held-Karp cap " + std::to_string(caps.held_karp));

  auto submetric = [&](const std::vector<int>& cities) {
    Metric sub((int)cities.size());
    for (std::size_t i = 0; i < cities.size(); ++i)
      for (std::size_t j = 0; j < cities.size(); ++j)
        sub.dist[i][j] = metric.dist[cities[i]][cities[j]];
    sub.triangle_checked = true;
    return sub;
  };

  auto solve = [&](auto&& self, const std::vector<int>& cities) -> std::vector<int> {
    if ((int)cities.size() <= threshold) {
      Metric sub = submetric(cities);
      Tour t = exact::held_karp(sub, caps);
      ++rep.nodes_enumerated;
      std::vector<int> order;
      order.reserve(t.order.size());
      for (int i : t.order) order.push_back(cities[i]);
      return order;
    }
    Metric sub = submetric(cities);
    CycleCover cover = min_weight_cycle_cover(sub);
    rep.nodes_enumerated += cover.circuits.size();
    std::vector<std::vector<int>> circuits;
    circuits.reserve(cover.circuits.size());
    for (const auto& c : cover.circuits) {
      std::vector<int> mapped;
      mapped.reserve(c.size());
      for (int i : c) mapped.push_back(cities[i]);
      circuits.push_back(std::move(mapped));
    }
    if (circuits.size() == 1) return circuits[0];
    std::vector<int> reps;
    reps.reserve(circuits.size());
    for (const auto& c : circuits) reps.push_back(c[0]);
    std::vector<int> rep_tour = self(self, reps);
    std::vector<int> tour;
    tour.reserve(cities.size());
    for (int v : rep_tour) {
      for (const auto& c : circuits)
        if (c[0] == v) {
          tour.insert(tour.end(), c.begin(), c.end());
          break;
        }
    }
    return tour;
  };

  std::vector<int> all(metric.n);
  for (int i = 0; i < metric.n; ++i) all[i] = i;
  std::vector<int> order = solve(solve, all);
  rep.solution = Tour{order, tour_cost(metric, order)};
  rep.value = rep.solution.cost;
  rep.guarantee = double(detail::ceil_log2(r_eff) + 1);
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- Grundy trade-off scheme ----
// Γ is monotone under induced supergraphs, so the best subset of size
// exactly ⌊n/r⌋ carries a witness worth ≥ ⌊Γ/r⌋ colors; first-fit over
// "witness classes, then the rest" realizes at least that many on g.
inline Report<std::vector<int>> grundy_scheme(const Graph& g, double r,
                                              const OracleCaps& caps = {}) {
  detail::Stopwatch clock;
  Report<std::vector<int>> rep;
  if (g.n == 0) {
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  double r_eff = detail::clamp_ratio(r, g.n, rep.note);
  int k_sub = (int)(double(g.n) / r_eff + 1e-9);
  if (k_sub > g.n) k_sub = g.n;
  if (k_sub > caps.grundy)
    throw CapExceeded("grundy subset size " + std::to_string(k_sub) + " exceeds cap " +
                      std::to_string(caps.grundy));
  int best_gamma = -1;
  std::vector<VertexSet> best_classes;
  VertexSet best_subset(g.n);
  for_each_subset_of_size(g.n, k_sub, [&](const VertexSet& s) {
    ++rep.nodes_enumerated;
    std::vector<int> back;
    Graph h = induced_subgraph(g, s, &back);
    exact::GrundyResult sub = exact::grundy_exact(h, caps);
    if (sub.number > best_gamma) {
      best_gamma = sub.number;
      best_subset = s;
      best_classes.clear();
      for (const auto& cls : sub.witness.classes) {
        VertexSet mapped(g.n);
        cls.for_each([&](int v) { mapped.set(back[v]); });
        best_classes.push_back(mapped);
      }
    }
  });
  std::vector<int> order;
  order.reserve(g.n);
  for (const auto& cls : best_classes) cls.for_each([&](int v) { order.push_back(v); });
  for (int v = 0; v < g.n; ++v)
    if (!best_subset.test(v)) order.push_back(v);
  rep.value = exact::first_fit_colors(g, order);
  rep.solution = order;
  if (k_sub >= g.n) {
    rep.guarantee = 1.0;  // exact mode
  } else {
    double certified = std::min(r_eff + r_eff / double(rep.value),
                                double(g.n) / double(rep.value));
    rep.guarantee = std::max(1.0, certified);
  }
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- set cover: greedy ----
inline CoverResult greedy_set_cover(const SetSystem& sys) {
  if (union_all(sys).count() != sys.universe)
    throw Infeasible("set system union does not cover the universe");
  CoverResult out;
  VertexSet covered(sys.universe);
  std::vector<char> taken(sys.sets.size(), 0);
  while (covered.count() < sys.universe) {
    int best = -1, gain = 0;
    for (int i = 0; i < sys.m(); ++i) {
      if (taken[i]) continue;
      ++out.enumerated;
      int gi = (sys.sets[i] - covered).count();
      if (gi > gain) {
        gain = gi;
        best = i;
      }
    }
    if (best < 0) throw std::logic_error("greedy stalled though union covers");
    taken[best] = 1;
    out.sets.push_back(best);
    covered |= sys.sets[best];
  }
  std::sort(out.sets.begin(), out.sets.end());
  out.size = (int)out.sets.size();
  return out;
}

// ---- set cover: group-merge scheme ----
// Merging q = ⌊r⌋ consecutive sets per block keeps coverability and can only
// lower the optimum; expanding the exact merged cover multiplies size by ≤ q.
inline CoverResult setcover_merge_approx(const SetSystem& sys, double r,
                                         const OracleCaps& caps = {}) {
  if (r < 1.0) throw InvalidInput("setcover_merge_approx needs r >= 1");
  if (union_all(sys).count() != sys.universe)
    throw Infeasible("set system union does not cover the universe");
  int q = std::max(1, (int)(r + 1e-9));
  int blocks = sys.m() == 0 ? 0 : (sys.m() + q - 1) / q;
  if (blocks > caps.set_cover)
    throw CapExceeded("merged family size " + std::to_string(blocks) + " exceeds cap " +
                      std::to_string(caps.set_cover));
  SetSystem merged{sys.universe, {}};
  for (int b = 0; b < blocks; ++b) {
    VertexSet u(sys.universe);
    for (int i = b * q; i < std::min((b + 1) * q, sys.m()); ++i) u |= sys.sets[i];
    merged.sets.push_back(u);
  }
  CoverResult inner = exact::set_cover_exact(merged, caps);
  std::vector<int> chosen;
  for (int b : inner.sets)
    for (int i = b * q; i < std::min((b + 1) * q, sys.m()); ++i) chosen.push_back(i);
  // redundant-set pruning, decreasing index
  for (int pos = (int)chosen.size() - 1; pos >= 0; --pos) {
    std::vector<int> without = chosen;
    without.erase(without.begin() + pos);
    if (is_cover(sys, without)) chosen = std::move(without);
  }
  CoverResult out;
  out.sets = std::move(chosen);
  out.size = (int)out.sets.size();
  out.enumerated = inner.enumerated;
  return out;
}

// ---- set cover: m^delta pipeline ----
// Threshold rule from the trade-off analysis: when m^δ beats ln n the greedy
// ratio is already good enough, otherwise merge with r = m^δ. Whichever arms
// ran, the smaller cover is returned and the guarantee is the best bound
// certified for it.
inline Report<std::vector<int>> setcover_mdelta(const SetSystem& sys, double delta,
                                                const OracleCaps& caps = {}) {
  if (delta <= 0.0 || delta > 1.0) throw InvalidInput("delta must be in (0, 1]");
  if (union_all(sys).count() != sys.universe)
    throw Infeasible("set system union does not cover the universe");
  detail::Stopwatch clock;
  Report<std::vector<int>> rep;
  if (sys.universe == 0) {
    rep.note = "empty universe; ";
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  double rd = std::pow(double(sys.m()), delta);
  double ln_n = std::log(double(sys.universe));
  bool greedy_primary = rd > ln_n;
  rep.note += greedy_primary ? "branch=greedy (m^delta > ln n); " : "branch=merge (m^delta <= ln n); ";

  CoverResult greedy = greedy_set_cover(sys);
  bool merge_ran = false;
  CoverResult merge;
  int q = std::max(1, (int)(rd + 1e-9));
  int blocks = sys.m() == 0 ? 0 : (sys.m() + q - 1) / q;
  if (blocks <= caps.set_cover) {
    merge = setcover_merge_approx(sys, rd, caps);
    merge_ran = true;
    rep.nodes_enumerated = merge.enumerated;
  } else {
    rep.note += "merge arm skipped (over exact cap); ";
  }

  const CoverResult* pick;
  if (!merge_ran) {
    pick = &greedy;
  } else if (greedy.size != merge.size) {
    pick = greedy.size < merge.size ? &greedy : &merge;
  } else {
    pick = greedy_primary ? &greedy : &merge;
  }
  rep.note += pick == &greedy ? "returned=greedy; " : "returned=merge; ";
  rep.value = pick->size;
  rep.solution = pick->sets;
  double bound = ln_n + 1.0;
  if (merge_ran) bound = std::min(bound, double(q));
  rep.guarantee = std::max(1.0, bound);
  rep.wall_time_ms = clock.ms();
  return rep;
}

}  // namespace tradeoff::schemes
