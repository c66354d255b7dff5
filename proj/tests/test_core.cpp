#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "tradeoff/bitset.hpp"
#include "tradeoff/enumerate.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/generate.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/io.hpp"
#include "tradeoff/rng.hpp"

using namespace tradeoff;

namespace {

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t mask = 0;
  s.for_each([&](int v) { mask |= 1u << v; });
  return mask;
}

VertexSet from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.set(v);
  return s;
}

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

}  // namespace

// ---- vertex sets ----

TEST_CASE("vertex set operations") {
  VertexSet a = VertexSet::of(70, {0, 3, 65});
  REQUIRE(a.count() == 3);
  REQUIRE(a.test(65));
  REQUIRE(!a.test(64));
  REQUIRE(a.universe() == 70);
  REQUIRE(a.first() == 0);

  VertexSet b = VertexSet::of(70, {3, 64});
  REQUIRE((a & b).count() == 1);
  REQUIRE((a | b).count() == 4);
  REQUIRE((a - b).count() == 2);
  REQUIRE(a.intersects(b));
  REQUIRE(VertexSet::of(70, {0, 3}).is_subset_of(a));
  REQUIRE(!a.is_subset_of(b));

  VertexSet c = a.complement();
  REQUIRE(c.count() == 67);
  REQUIRE(!c.test(0));
  REQUIRE(c.test(1));
  REQUIRE((a | c).count() == 70);

  std::vector<int> order;
  a.for_each([&](int v) { order.push_back(v); });
  REQUIRE(order == std::vector<int>{0, 3, 65});
  REQUIRE(a.to_vector() == order);

  VertexSet empty(70);
  REQUIRE(empty.empty());
  REQUIRE(empty.first() == -1);
}

TEST_CASE("lexicographic set comparison prefers low vertices") {
  VertexSet s0 = VertexSet::of(5, {0});
  VertexSet s1 = VertexSet::of(5, {1});
  REQUIRE(s0.lex_less(s1));
  REQUIRE(!s1.lex_less(s0));
  // {0,4} before {1,2}: vertex 0 wins the first disagreement
  REQUIRE(VertexSet::of(5, {0, 4}).lex_less(VertexSet::of(5, {1, 2})));
  // equal sets are not less
  REQUIRE(!s0.lex_less(s0));
  // spans multiple words
  REQUIRE(VertexSet::of(130, {2, 128}).lex_less(VertexSet::of(130, {3, 128})));
}

// ---- counting and subset enumeration ----

TEST_CASE("binomial coefficients") {
  REQUIRE(binomial(0, 0) == 1);
  REQUIRE(binomial(5, 7) == 0);
  REQUIRE(binomial(16, 8) == 12870);
  REQUIRE(binomial(20, 10) == 184756);
  REQUIRE(binomial(52, 5) == 2598960);
  REQUIRE(subset_count_up_to(16, 8) == 39203);
  REQUIRE(subset_count_up_to(16, 4) == 2517);
  REQUIRE(subset_count_up_to(20, 13) == 988116);
  REQUIRE(subset_count_up_to(6, 1) == 7);
}

TEST_CASE("fixed-size subsets arrive in ascending bitmask order, no repeats") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint32_t> masks;
      for_each_subset_of_size(n, k, [&](const VertexSet& s) {
        REQUIRE((int)s.count() == k);
        masks.push_back(to_mask(s));
      });
      REQUIRE(masks.size() == binomial(n, k));
      REQUIRE(std::is_sorted(masks.begin(), masks.end()));
      REQUIRE(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
    }
}

TEST_CASE("bounded-size subset enumeration covers sizes 0..k") {
  std::uint64_t seen = 0;
  int last_size = 0;
  for_each_subset_up_to(6, 4, [&](const VertexSet& s) {
    REQUIRE((int)s.count() >= last_size);  // sizes ascend
    last_size = (int)s.count();
    ++seen;
  });
  REQUIRE(seen == subset_count_up_to(6, 4));
}

TEST_CASE("independent subset enumeration matches the exhaustive scan") {
  // P_3 by hand
  Graph p3 = path_graph(3);
  std::set<std::uint32_t> got;
  for_each_independent_subset(p3, p3.all_vertices(),
                              [&](const VertexSet& s) { got.insert(to_mask(s)); });
  REQUIRE(got == std::set<std::uint32_t>{0b000, 0b001, 0b010, 0b100, 0b101});

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen::generate_graph(9, 0.35, seed);
    std::set<std::uint32_t> lib;
    for_each_independent_subset(g, g.all_vertices(), [&](const VertexSet& s) {
      REQUIRE(is_independent(g, s));
      lib.insert(to_mask(s));
    });
    std::set<std::uint32_t> ref;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask)
      if (bf::independent(g, mask)) ref.insert(mask);
    REQUIRE(lib == ref);
  }
}

TEST_CASE("maximal independent set enumeration is exact and duplicate-free") {
  Graph p3 = path_graph(3);
  std::vector<std::uint32_t> got;
  for_each_maximal_independent_set(p3, p3.all_vertices(),
                                   [&](const VertexSet& s) { got.push_back(to_mask(s)); });
  std::sort(got.begin(), got.end());
  REQUIRE(got == std::vector<std::uint32_t>{0b010, 0b101});

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen::generate_graph(9, 0.3, seed);
    std::set<std::uint32_t> lib;
    for_each_maximal_independent_set(g, g.all_vertices(), [&](const VertexSet& s) {
      REQUIRE(is_maximal_independent(g, s));
      REQUIRE(!lib.count(to_mask(s)));
      lib.insert(to_mask(s));
    });
    std::set<std::uint32_t> ref;  // maximal independent == independent + dominating
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask)
      if (bf::independent(g, mask) && bf::dominating(g, mask)) ref.insert(mask);
    REQUIRE(lib == ref);
  }
}

// ---- graphs ----

TEST_CASE("graph construction and edge bookkeeping") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  REQUIRE(g.has_edge(1, 0));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE(!g.has_edge(0, 2));
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  REQUIRE_THROWS_AS(g.add_edge(1, 1), InvalidInput);
  REQUIRE_THROWS_AS(g.add_edge(0, 4), InvalidInput);
  REQUIRE(g.all_vertices().count() == 4);
}

TEST_CASE("induced subgraph renumbers ascending and reports the back-map") {
  Graph g = cycle_graph(5);
  std::vector<int> back;
  Graph h = induced_subgraph(g, VertexSet::of(5, {0, 1, 3}), &back);
  REQUIRE(h.n == 3);
  REQUIRE(back == std::vector<int>{0, 1, 3});
  REQUIRE(h.has_edge(0, 1));   // 0-1 survives
  REQUIRE(!h.has_edge(1, 2));  // 1-3 was no edge
  REQUIRE(!h.has_edge(0, 2));  // 0-3 was no edge
}

TEST_CASE("neighbors of a set excludes the set itself") {
  Graph g = path_graph(4);
  VertexSet nb = neighbors(g, VertexSet::of(4, {1}));
  REQUIRE(nb.to_vector() == std::vector<int>{0, 2});
}

TEST_CASE("maximal matching is a valid maximal matching") {
  Graph p4 = path_graph(4);
  auto m = maximal_matching(p4);
  REQUIRE(m == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen::generate_graph(10, 0.4, seed);
    auto match = maximal_matching(g);
    std::set<int> touched;
    for (auto [u, v] : match) {
      REQUIRE(g.has_edge(u, v));
      REQUIRE(!touched.count(u));
      REQUIRE(!touched.count(v));
      touched.insert(u);
      touched.insert(v);
    }
    for (auto [u, v] : g.edges())  // maximality: every edge touches the matching
      REQUIRE((touched.count(u) || touched.count(v)));
  }
}

TEST_CASE("feasibility predicates agree with first-principles checks") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = gen::generate_graph(8, 0.3 + 0.05 * (double)(seed % 5), seed);
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
      VertexSet s = from_mask(g.n, mask);
      REQUIRE(is_independent(g, s) == bf::independent(g, mask));
      REQUIRE(is_dominating(g, s) == bf::dominating(g, mask));
      REQUIRE(is_vertex_cover(g, s) == bf::vertex_cover(g, mask));
      REQUIRE(is_minimal_vertex_cover(g, s) == bf::minimal_vertex_cover(g, mask));
      REQUIRE(is_feasible(g, s, ProblemKind::IndependentSet) == bf::independent(g, mask));
      REQUIRE(is_feasible(g, s, ProblemKind::IndependentDominatingSet) ==
              (bf::independent(g, mask) && bf::dominating(g, mask)));
      REQUIRE(is_feasible(g, s, ProblemKind::MinimalVertexCover) ==
              bf::minimal_vertex_cover(g, mask));
      REQUIRE(is_feasible(g, s, ProblemKind::InducedPath) == bf::induced_path_ok(g, mask));
      REQUIRE(is_feasible(g, s, ProblemKind::InducedTree) == bf::induced_tree_ok(g, mask));
      REQUIRE(is_feasible(g, s, ProblemKind::InducedForest) == bf::induced_forest_ok(g, mask));
    }
  }
}

// ---- RNG ----

TEST_CASE("rng is deterministic and bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());

  Rng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 200; ++i) {
    std::uint64_t v = r.below(5);
    REQUIRE(v < 5);
    seen.insert(v);
  }
  REQUIRE(seen.size() == 5);  // all residues hit

  for (int i = 0; i < 100; ++i) {
    double u = r.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    long long x = r.range(-3, 3);
    REQUIRE(x >= -3);
    REQUIRE(x <= 3);
  }
}

// ---- text formats ----

TEST_CASE("dimacs graph parsing") {
  Graph g = io::parse_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
  REQUIRE(g.n == 3);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE(!g.has_edge(0, 2));

  REQUIRE_THROWS_AS(io::parse_graph("e 1 2\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_graph("p edge 2 2\ne 1 2\n"), ParseError);
  try {
    io::parse_graph("p edge 2 1\nq 1 2\n");
    REQUIRE(false);
  } catch (const ParseError& e) {
    REQUIRE(e.line == 2);
  }
}

TEST_CASE("dimacs cnf parsing") {
  CnfFormula phi = io::parse_cnf("c comment\np cnf 3 1\n1 -2 3 0\n");
  REQUIRE(phi.num_vars == 3);
  REQUIRE(phi.clauses.size() == 1);
  REQUIRE(phi.clauses[0].lits == std::vector<int>{1, -2, 3});

  REQUIRE_THROWS_AS(io::parse_cnf("p cnf 2 1\n1 2\n"), ParseError);        // no terminator
  REQUIRE_THROWS_AS(io::parse_cnf("p cnf 2 1\n1 3 0\n"), ParseError);      // var range
  REQUIRE_THROWS_AS(io::parse_cnf("p cnf 2 1\n1 -1 0\n"), ParseError);     // repeat var
  REQUIRE_THROWS_AS(io::parse_cnf("p cnf 2 2\n1 0\n"), ParseError);        // count mismatch
  REQUIRE_THROWS_AS(io::parse_cnf("p cnf 4 1\n1 2 3 4 0\n"), ParseError);  // too wide
}

TEST_CASE("metric parsing accepts -1 diagonal only") {
  Metric m = io::parse_metric("2\n-1 5\n4 0\n");
  REQUIRE(m.dist[0][0] == 0);
  REQUIRE(m.dist[0][1] == 5);
  REQUIRE(m.dist[1][0] == 4);
  REQUIRE_THROWS_AS(io::parse_metric("2\n0 -1\n4 0\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_metric("2\n0 5\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_metric("2\n0 5 1\n4 0\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_metric("2\n0 3\n4 0\n0 0\n"), ParseError);
}

TEST_CASE("set system and csp parsing") {
  SetSystem sys = io::parse_set_system("4 2\n3 1 2 4\n1 3\n");
  REQUIRE(sys.universe == 4);
  REQUIRE(sys.m() == 2);
  REQUIRE(sys.sets[0].to_vector() == std::vector<int>{0, 1, 3});
  REQUIRE_THROWS_AS(io::parse_set_system("4 1\n2 1 5\n"), ParseError);
  REQUIRE_THROWS_AS(io::parse_set_system("4 1\n2 1 1\n"), ParseError);

  BinaryCsp csp = io::parse_csp("2 2 1\n1 2 2 0 0 1 1\n");
  REQUIRE(csp.num_vars == 2);
  REQUIRE(csp.alphabet == 2);
  REQUIRE(csp.edges[0].allowed == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  REQUIRE_THROWS_AS(io::parse_csp("2 2 1\n1 2 1 0 2\n"), ParseError);   // symbol range
  REQUIRE_THROWS_AS(io::parse_csp("2 2 1\n1 1 1 0 0\n"), ParseError);   // self loop
  REQUIRE_THROWS_AS(io::parse_csp("2 2 1\n1 2 2 0 0 0 0\n"), ParseError);  // dup pair
  REQUIRE_THROWS_AS(io::parse_csp("2 2 2\n1 2 1 0 0\n2 1 1 0 0\n"), ParseError);  // dup edge
}

TEST_CASE("parse then emit is the identity on canonical text") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::string g = io::emit_graph(gen::generate_graph(10, 0.4, seed));
    REQUIRE(io::emit_graph(io::parse_graph(g)) == g);
    std::string m = io::emit_metric(gen::generate_metric(6, seed));
    REQUIRE(io::emit_metric(io::parse_metric(m)) == m);
    std::string c = io::emit_cnf(gen::generate_cnf(6, 5, seed));
    REQUIRE(io::emit_cnf(io::parse_cnf(c)) == c);
    std::string s = io::emit_set_system(gen::generate_set_system(8, 5, seed));
    REQUIRE(io::emit_set_system(io::parse_set_system(s)) == s);
    std::string p = io::emit_csp(gen::generate_csp(5, 3, 4, seed));
    REQUIRE(io::emit_csp(io::parse_csp(p)) == p);
  }
}

// ---- generators ----

TEST_CASE("generators are seed-deterministic") {
  REQUIRE(io::emit_graph(gen::generate_graph(8, 0.5, 7)) ==
          io::emit_graph(gen::generate_graph(8, 0.5, 7)));
  REQUIRE(io::emit_metric(gen::generate_metric(5, 1)) ==
          io::emit_metric(gen::generate_metric(5, 1)));
  REQUIRE(io::emit_cnf(gen::generate_cnf(6, 4, 3)) == io::emit_cnf(gen::generate_cnf(6, 4, 3)));
  REQUIRE(io::emit_csp(gen::generate_csp(5, 2, 3, 9)) ==
          io::emit_csp(gen::generate_csp(5, 2, 3, 9)));
  REQUIRE(io::emit_set_system(gen::generate_set_system(10, 6, 3)) ==
          io::emit_set_system(gen::generate_set_system(10, 6, 3)));
  REQUIRE(io::emit_graph(gen::generate_graph(8, 0.5, 7)) !=
          io::emit_graph(gen::generate_graph(8, 0.5, 8)));
}

TEST_CASE("generator outputs satisfy their structural promises") {
  REQUIRE(gen::generate_graph(6, 0.0, 1).edge_count() == 0);
  REQUIRE(gen::generate_graph(6, 1.0, 1).edge_count() == 15);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Metric m = gen::generate_metric(7, seed);
    REQUIRE(triangle_holds(m));

    SetSystem sys = gen::generate_set_system(10, 6, seed);
    REQUIRE(union_all(sys).count() == 10);

    CnfFormula phi = gen::generate_cnf(5, 6, seed);
    REQUIRE(phi.clauses.size() == 6);
    for (const Clause& c : phi.clauses) REQUIRE(c.lits.size() == 3);
    validate(phi);  // throws on repeated vars / range errors

    BinaryCsp csp = gen::generate_csp(6, 2, 5, seed);
    REQUIRE(csp.edges.size() == 5);
    validate(csp);
  }

  REQUIRE_THROWS_AS(gen::generate_graph(5, 1.5, 0), BadSpec);
  REQUIRE_THROWS_AS(gen::generate_cnf(2, 1, 0), BadSpec);
  REQUIRE_THROWS_AS(gen::generate_csp(3, 2, 9, 0), BadSpec);
  REQUIRE_THROWS_AS(gen::generate_set_system(5, 0, 0), BadSpec);
}
