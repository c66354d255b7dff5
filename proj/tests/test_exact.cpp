#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "tradeoff/enumerate.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/exact.hpp"
#include "tradeoff/generate.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/hungarian.hpp"
#include "tradeoff/io.hpp"

using namespace tradeoff;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// graphs of varied density for the cross-validation loops
Graph corpus_graph(int n, std::uint64_t seed) {
  double p = 0.15 + 0.1 * double(seed % 8);
  return gen::generate_graph(n, p, seed);
}

}  // namespace

// ---- maximum independent set ----

TEST_CASE("max independent set matches exhaustive scan") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = corpus_graph(3 + (int)(seed % 10), seed);
    exact::BestSet got = exact::max_independent_set_exact(g);
    REQUIRE(got.size == bf::max_independent_set(g));
    REQUIRE(is_independent(g, got.vertices));
    REQUIRE((int)got.vertices.count() == got.size);
  }
  REQUIRE(exact::max_independent_set_exact(Graph(0)).size == 0);
  REQUIRE(exact::max_independent_set_exact(complete_graph(6)).size == 1);
}

TEST_CASE("max independent set breaks ties toward the lexicographically least set") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = corpus_graph(8, seed + 100);
    exact::BestSet got = exact::max_independent_set_exact(g);
    bool better_exists = false;
    for_each_subset_of_size(g.n, got.size, [&](const VertexSet& s) {
      if (is_independent(g, s) && s.lex_less(got.vertices)) better_exists = true;
    });
    REQUIRE(!better_exists);
  }
}

// ---- minimum independent dominating set / maximum minimal vertex cover ----

TEST_CASE("min independent dominating set matches exhaustive scan") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = corpus_graph(3 + (int)(seed % 10), seed + 7);
    exact::BestSet got = exact::min_ids_exact(g);
    REQUIRE(got.size == bf::min_ids(g));
    REQUIRE(is_independent(g, got.vertices));
    REQUIRE(is_dominating(g, got.vertices));
  }
  // empty graph: every vertex must dominate itself
  REQUIRE(exact::min_ids_exact(Graph(3)).size == 3);
  REQUIRE(exact::min_ids_exact(Graph(0)).size == 0);
  REQUIRE(exact::min_ids_exact(complete_graph(5)).size == 1);
}

TEST_CASE("min independent dominating set prefers the lexicographically least optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = corpus_graph(8, seed + 200);
    exact::BestSet got = exact::min_ids_exact(g);
    bool better_exists = false;
    for_each_subset_of_size(g.n, got.size, [&](const VertexSet& s) {
      if (is_independent(g, s) && is_dominating(g, s) && s.lex_less(got.vertices))
        better_exists = true;
    });
    REQUIRE(!better_exists);
  }
}

TEST_CASE("max minimal vertex cover complements the min independent dominating set") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = corpus_graph(3 + (int)(seed % 10), seed + 13);
    exact::BestSet got = exact::max_minimal_vc_exact(g);
    REQUIRE(got.size == bf::max_minimal_vc(g));
    REQUIRE(is_minimal_vertex_cover(g, got.vertices));
    REQUIRE(got.size + exact::min_ids_exact(g).size == g.n);
  }
  REQUIRE(exact::max_minimal_vc_exact(Graph(4)).size == 0);  // edgeless: empty cover
}

// ---- maximum induced path / tree / forest ----

TEST_CASE("max induced subgraph oracles match exhaustive scans") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = corpus_graph(3 + (int)(seed % 8), seed + 21);
    exact::BestSet path = exact::max_induced_exact(g, ProblemKind::InducedPath);
    REQUIRE(path.size == bf::max_induced_path(g));
    REQUIRE(is_feasible(g, path.vertices, ProblemKind::InducedPath));
    exact::BestSet tree = exact::max_induced_exact(g, ProblemKind::InducedTree);
    REQUIRE(tree.size == bf::max_induced_tree(g));
    REQUIRE(is_feasible(g, tree.vertices, ProblemKind::InducedTree));
    exact::BestSet forest = exact::max_induced_exact(g, ProblemKind::InducedForest);
    REQUIRE(forest.size == bf::max_induced_forest(g));
    REQUIRE(is_feasible(g, forest.vertices, ProblemKind::InducedForest));
    REQUIRE(path.size <= tree.size);
    REQUIRE(tree.size <= forest.size);
  }
  REQUIRE(exact::max_induced_exact(complete_graph(5), ProblemKind::InducedPath).size == 2);
  REQUIRE(exact::max_induced_exact(cycle_graph(6), ProblemKind::InducedPath).size == 5);
  REQUIRE(exact::max_induced_exact(cycle_graph(6), ProblemKind::InducedForest).size == 5);
  REQUIRE(exact::max_induced_exact(Graph(0), ProblemKind::InducedForest).size == 0);
  REQUIRE_THROWS_AS(exact::max_induced_exact(Graph(0), ProblemKind::InducedPath), Infeasible);
  REQUIRE_THROWS_AS(exact::max_induced_exact(Graph(0), ProblemKind::InducedTree), Infeasible);
  REQUIRE_THROWS_AS(exact::max_induced_exact(path_graph(3), ProblemKind::IndependentSet),
                    InvalidInput);
}

// ---- Hungarian assignment ----

TEST_CASE("min cost assignment solves small matrices exactly") {
  // brute force over permutations for random cost matrices
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    int n = 2 + (int)(seed % 5);
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (auto& row : cost)
      for (auto& c : row) c = rng.range(0, 50);
    std::vector<int> assign = min_cost_assignment(cost);
    long long got = 0;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
      got += cost[i][assign[i]];
      REQUIRE(!used[assign[i]]);
      used[assign[i]] = 1;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long long best = -1;
    do {
      long long c = 0;
      for (int i = 0; i < n; ++i) c += cost[i][perm[i]];
      if (best < 0 || c < best) best = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(got == best);
  }
  REQUIRE_THROWS_AS(min_cost_assignment({{1, 2}}), InvalidInput);
}

// ---- Held-Karp ----

TEST_CASE("held-karp matches the permutation scan") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Metric m = gen::generate_metric(1 + (int)(seed % 8), seed);
    exact::Tour t = exact::held_karp(m);
    REQUIRE(t.cost == bf::atsp(m));
    REQUIRE(t.order.size() == (std::size_t)m.n);
    REQUIRE(t.order[0] == 0);
    std::vector<int> sorted = t.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m.n; ++i) REQUIRE(sorted[i] == i);
    REQUIRE(tour_cost(m, t.order) == t.cost);
  }
  REQUIRE(exact::held_karp(gen::generate_metric(1, 3)).cost == 0);
  REQUIRE_THROWS_AS(exact::held_karp(Metric(0)), InvalidInput);

  // asymmetry is respected
  Metric m(2);
  m.dist = {{0, 3}, {7, 0}};
  REQUIRE(exact::held_karp(m).cost == 10);
}

// ---- Grundy number ----

TEST_CASE("grundy number matches the ordering brute force") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = corpus_graph(1 + (int)(seed % 7), seed + 3);
    exact::GrundyResult got = exact::grundy_exact(g);
    REQUIRE(got.number == bf::grundy(g));
  }
  REQUIRE(exact::grundy_exact(path_graph(4)).number == 3);
  REQUIRE(exact::grundy_exact(cycle_graph(4)).number == 2);
  REQUIRE(exact::grundy_exact(complete_graph(5)).number == 5);
  REQUIRE(exact::grundy_exact(Graph(0)).number == 0);
  REQUIRE(exact::grundy_exact(Graph(3)).number == 1);
}

TEST_CASE("grundy witness classes replay to the reported number") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = corpus_graph(7, seed + 31);
    exact::GrundyResult got = exact::grundy_exact(g);
    REQUIRE((int)got.witness.classes.size() == got.number);
    VertexSet seen(g.n);
    std::vector<int> order;
    for (const VertexSet& cls : got.witness.classes) {
      REQUIRE(!cls.empty());
      REQUIRE(is_independent(g, cls));
      REQUIRE(!seen.intersects(cls));
      seen |= cls;
      cls.for_each([&](int v) { order.push_back(v); });
    }
    // first-fit over the class order realizes every color
    REQUIRE(exact::first_fit_colors(g, order) >= got.number);
  }
}

TEST_CASE("first fit coloring follows the given order") {
  Graph p4 = path_graph(4);
  // 0 and 3 take color 1, then 1 takes 2, forcing color 3 on vertex 2
  REQUIRE(exact::first_fit_colors(p4, {0, 3, 1, 2}) == 3);
  REQUIRE(exact::first_fit_colors(p4, {0, 1, 2, 3}) == 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = corpus_graph(7, seed + 47);
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    REQUIRE(exact::first_fit_colors(g, order) == bf::first_fit(g, order));
  }
}

// ---- set cover ----

TEST_CASE("exact set cover matches the subfamily scan") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SetSystem sys = gen::generate_set_system(4 + (int)(seed % 6), 3 + (int)(seed % 5), seed);
    exact::CoverResult got = exact::set_cover_exact(sys);
    REQUIRE(got.size == bf::min_set_cover(sys));
    REQUIRE(is_cover(sys, got.sets));
    REQUIRE((int)got.sets.size() == got.size);
    REQUIRE(std::is_sorted(got.sets.begin(), got.sets.end()));
  }
  SetSystem gap{3, {VertexSet::of(3, {0}), VertexSet::of(3, {1})}};
  REQUIRE_THROWS_AS(exact::set_cover_exact(gap), Infeasible);
  SetSystem empty_universe{0, {VertexSet(0)}};
  REQUIRE(exact::set_cover_exact(empty_universe).size == 0);
}

// ---- CSP minimum violations ----

TEST_CASE("csp minimum violation count matches the assignment scan") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 2 + (int)(seed % 3);
    int s = 2 + (int)(seed % 2);
    int e = (int)(seed % (std::uint64_t)(n * (n - 1) / 2 + 1));
    BinaryCsp csp = gen::generate_csp(n, s, e, seed);
    exact::CspOptimum got = exact::csp_min_unsat(csp);
    REQUIRE(got.violations == bf::csp_min_unsat(csp));
    REQUIRE(violation_count(csp, got.assignment) == got.violations);
  }
  BinaryCsp empty{0, 2, {}};
  REQUIRE(exact::csp_min_unsat(empty).violations == 0);
}

// ---- caps ----

TEST_CASE("oracles refuse instances beyond their caps") {
  exact::OracleCaps tight;
  tight.mis = 4;
  tight.ids = 4;
  tight.induced = 4;
  tight.induced_path = 4;
  tight.held_karp = 4;
  tight.grundy = 4;
  tight.set_cover = 2;
  tight.csp_assignments = 10;

  Graph g5 = corpus_graph(5, 0);
  REQUIRE_THROWS_AS(exact::max_independent_set_exact(g5, tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::min_ids_exact(g5, tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::max_minimal_vc_exact(g5, tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::max_induced_exact(g5, ProblemKind::InducedPath, tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::max_induced_exact(g5, ProblemKind::InducedForest, tight),
                    CapExceeded);
  REQUIRE_THROWS_AS(exact::held_karp(gen::generate_metric(5, 1), tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::grundy_exact(g5, tight), CapExceeded);
  REQUIRE_THROWS_AS(exact::set_cover_exact(gen::generate_set_system(4, 3, 1), tight),
                    CapExceeded);
  REQUIRE_THROWS_AS(exact::csp_min_unsat(gen::generate_csp(4, 2, 2, 1), tight), CapExceeded);

  // at the boundary the oracles still run
  Graph g4 = corpus_graph(4, 1);
  REQUIRE_NOTHROW(exact::max_independent_set_exact(g4, tight));
  REQUIRE_NOTHROW(exact::grundy_exact(g4, tight));
}
