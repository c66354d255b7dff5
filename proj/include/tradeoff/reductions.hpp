#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/bitset.hpp"
#include "tradeoff/cnf.hpp"
#include "tradeoff/csp.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/graph.hpp"

namespace tradeoff::gadgets {

// ---- role annotations ----
//
// Every gadget vertex carries a role describing which piece of the source
// instance it encodes. Tests and the sidecar emitter read these instead of
// re-deriving the layout.

enum class RoleTag {
  kConnector,     // path gadget: v between consecutive clause cliques
  kCliqueMember,  // path gadget: one satisfying partial assignment of a clause
  kChoice,        // mids gadget: w_{v,a}, "variable v takes symbol a"
  kDummy,         // mids gadget: the extra clique vertex forcing a pick
  kPairSet,       // mids gadget: member of the set guarding one allowed pair
  kEdgeSet,       // mids gadget: member of the per-edge guard set
};

struct VertexRole {
  RoleTag tag{};
  // Path gadget fields (0-based copy/clause).
  int copy = -1;
  int clause = -1;
  std::vector<int> assign;  // signed 1-based lits of the partial assignment
  // Mids gadget fields.
  int var = -1;     // owning CSP vertex (0-based)
  int symbol = -1;  // symbol chosen by a kChoice vertex
  int edge = -1;    // owning CSP edge index (0-based, construction order)
  int sym_u = -1, sym_v = -1;  // guarded pair for kPairSet
  int slot = -1;               // position within an r-vertex guard set
};

struct GadgetGraph {
  Graph graph;
  std::vector<VertexRole> roles;
  int r = 1;
};

// Sidecar line body for one vertex (everything after the 1-based index).
// Copies, clauses, variables, edges and slots print 1-based to match the
// graph/CNF file conventions; symbol values print 0-based as in CSP files.
inline std::string describe(const VertexRole& role) {
  auto lit_string = [](const std::vector<int>& lits) {
    std::string s;
    for (int lit : lits) {
      s += (lit > 0 ? '+' : '-');
      s += std::to_string(std::abs(lit));
    }
    return s;
  };
  switch (role.tag) {
    case RoleTag::kConnector:
      return "connector copy=" + std::to_string(role.copy + 1) +
             " clause=" + std::to_string(role.clause + 1);
    case RoleTag::kCliqueMember:
      return "member copy=" + std::to_string(role.copy + 1) +
             " clause=" + std::to_string(role.clause + 1) +
             " assign=" + lit_string(role.assign);
    case RoleTag::kChoice:
      return "choice var=" + std::to_string(role.var + 1) +
             " symbol=" + std::to_string(role.symbol);
    case RoleTag::kDummy:
      return "dummy var=" + std::to_string(role.var + 1);
    case RoleTag::kPairSet:
      return "pairset edge=" + std::to_string(role.edge + 1) +
             " pair=" + std::to_string(role.sym_u) + "," +
             std::to_string(role.sym_v) + " slot=" + std::to_string(role.slot + 1);
    case RoleTag::kEdgeSet:
      return "edgeset edge=" + std::to_string(role.edge + 1) +
             " slot=" + std::to_string(role.slot + 1);
  }
  return "unknown";
}

// ---- SAT -> induced path gadget ----

namespace detail {

// Bit t of a clique mask is the truth value given to the variable of the
// clause's t-th literal. The single falsifying mask is skipped, so clique
// ranks run over satisfying masks in ascending order.
struct PathLayout {
  int m = 0, r = 1;
  std::vector<int> clique_size;    // per clause: 2^k - 1
  std::vector<int> falsify;        // per clause: the falsifying mask
  std::vector<int> clause_offset;  // clause block offset within one copy
  int copy_size = 0;

  PathLayout(const CnfFormula& phi, int r_in) : r(r_in) {
    if (r < 1) throw InvalidInput("replication r must be >= 1");
    validate(phi);
    m = (int)phi.clauses.size();
    for (const Clause& c : phi.clauses) {
      int k = (int)c.lits.size();
      if (k == 1) throw UnsupportedClause("1-literal clauses are not supported");
      int fmask = 0;
      for (int t = 0; t < k; ++t)
        if (c.lits[t] < 0) fmask |= 1 << t;
      clique_size.push_back((1 << k) - 1);
      falsify.push_back(fmask);
      clause_offset.push_back(copy_size);
      copy_size += 1 + clique_size.back();
    }
  }

  int total() const { return r * copy_size; }
  int connector(int j, int i) const { return j * copy_size + clause_offset[i]; }
  // rank = position of `mask` among the clause's satisfying masks.
  int member(int j, int i, int rank) const { return connector(j, i) + 1 + rank; }
  int rank_of(int i, int mask) const { return mask - (mask > falsify[i] ? 1 : 0); }
};

}  // namespace detail

// One chain of m clause cliques per copy, copies linked end to end, plus an
// edge between any two clique vertices (from distinct cliques, in any copies)
// whose partial assignments give some shared variable different values.
inline GadgetGraph sat_to_induced_path(const CnfFormula& phi, int r) {
  detail::PathLayout lay(phi, r);
  GadgetGraph out;
  out.r = r;
  out.graph = Graph(lay.total());
  out.roles.resize(lay.total());

  struct Member {
    int vertex;
    int copy, clause;
    std::vector<std::pair<int, bool>> values;  // (variable, truth), 1-based var
  };
  std::vector<Member> members;

  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < lay.m; ++i) {
      const Clause& c = phi.clauses[i];
      int conn = lay.connector(j, i);
      out.roles[conn] = VertexRole{RoleTag::kConnector, j, i};
      int k = (int)c.lits.size();
      for (int mask = 0; mask < (1 << k); ++mask) {
        if (mask == lay.falsify[i]) continue;
        int v = lay.member(j, i, lay.rank_of(i, mask));
        VertexRole role{RoleTag::kCliqueMember, j, i};
        Member mem{v, j, i, {}};
        for (int t = 0; t < k; ++t) {
          int var = std::abs(c.lits[t]);
          bool val = (mask >> t) & 1;
          role.assign.push_back(val ? var : -var);
          mem.values.emplace_back(var, val);
        }
        out.roles[v] = std::move(role);
        members.push_back(std::move(mem));
        // clique edges within the clause block
        for (int rank = 0; rank < lay.rank_of(i, mask); ++rank)
          out.graph.add_edge(lay.member(j, i, rank), v);
        // connector of this clause sees the whole clique
        out.graph.add_edge(conn, v);
        // the next connector in the chain sees the previous clique
        if (i + 1 < lay.m)
          out.graph.add_edge(lay.connector(j, i + 1), v);
        else if (j + 1 < r && lay.m > 0)
          out.graph.add_edge(lay.connector(j + 1, 0), v);
      }
    }
  }

  auto contradicts = [](const Member& a, const Member& b) {
    for (auto [var, val] : a.values)
      for (auto [var2, val2] : b.values)
        if (var == var2 && val != val2) return true;
    return false;
  };
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a].copy == members[b].copy && members[a].clause == members[b].clause)
        continue;
      if (contradicts(members[a], members[b]))
        out.graph.add_edge(members[a].vertex, members[b].vertex);
    }
  return out;
}

// All connectors plus, per clique, the vertex agreeing with tau: an induced
// path on 2rm vertices whenever tau satisfies phi.
inline VertexSet induced_path_witness(const CnfFormula& phi, const BoolAssignment& tau, int r) {
  detail::PathLayout lay(phi, r);
  if (!satisfies(phi, tau)) throw NotSatisfying("assignment does not satisfy the formula");
  VertexSet picked(lay.total());
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < lay.m; ++i) {
      picked.set(lay.connector(j, i));
      const Clause& c = phi.clauses[i];
      int mask = 0;
      for (int t = 0; t < (int)c.lits.size(); ++t)
        if (tau[std::abs(c.lits[t]) - 1]) mask |= 1 << t;
      picked.set(lay.member(j, i, lay.rank_of(i, mask)));
    }
  return picked;
}

// ---- binary CSP -> minimum independent dominating set gadget ----

// Per CSP vertex a clique of s choice vertices plus one dummy; per edge an
// r-vertex guard set for each allowed pair and one r-vertex guard set for the
// edge itself. Choice adjacency, with C_e the edge's allowed pairs:
//   w_{u,i} ~ I_{e,(i',j')}  iff  i appears as a first coordinate in C_e and i' != i
//   w_{v,j} ~ I_{e,(i',j')}  iff  (i',j) in C_e
//   w_{u,i} ~ I_e            iff  i appears as a first coordinate in C_e
// So a pair guard set escapes domination exactly when u voted for its first
// coordinate and v refused its row, and I_e escapes when u's vote heads no
// allowed pair at all.
inline GadgetGraph csp_to_mids(const BinaryCsp& csp, int r) {
  if (r < 1) throw InvalidInput("replication r must be >= 1");
  validate(csp);
  const int n = csp.num_vars, s = csp.alphabet;

  GadgetGraph out;
  out.r = r;
  int total = n * (s + 1);
  for (const CspEdge& e : csp.edges) total += r * ((int)e.allowed.size() + 1);
  out.graph = Graph(total);
  out.roles.resize(total);

  auto choice = [s](int v, int a) { return v * (s + 1) + a; };
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < s; ++a) {
      VertexRole role;
      role.tag = RoleTag::kChoice;
      role.var = v;
      role.symbol = a;
      out.roles[choice(v, a)] = role;
    }
    VertexRole dummy;
    dummy.tag = RoleTag::kDummy;
    dummy.var = v;
    out.roles[choice(v, s)] = dummy;
    for (int a = 0; a <= s; ++a)
      for (int b = a + 1; b <= s; ++b)
        out.graph.add_edge(choice(v, a), choice(v, b));
  }

  int next = n * (s + 1);
  for (int ei = 0; ei < (int)csp.edges.size(); ++ei) {
    const CspEdge& e = csp.edges[ei];
    std::set<std::pair<int, int>> allowed(e.allowed.begin(), e.allowed.end());
    std::set<int> firsts, seconds;
    for (auto [i, j] : e.allowed) {
      firsts.insert(i);
      seconds.insert(j);
    }
    for (auto [pi, pj] : e.allowed) {
      for (int t = 0; t < r; ++t, ++next) {
        VertexRole role;
        role.tag = RoleTag::kPairSet;
        role.edge = ei;
        role.sym_u = pi;
        role.sym_v = pj;
        role.slot = t;
        out.roles[next] = role;
        for (int i : firsts)
          if (i != pi) out.graph.add_edge(choice(e.u, i), next);
        for (int j : seconds)
          if (allowed.count({pi, j})) out.graph.add_edge(choice(e.v, j), next);
      }
    }
    for (int t = 0; t < r; ++t, ++next) {
      VertexRole role;
      role.tag = RoleTag::kEdgeSet;
      role.edge = ei;
      role.slot = t;
      out.roles[next] = role;
      for (int i : firsts) out.graph.add_edge(choice(e.u, i), next);
    }
  }
  return out;
}

// { w_{v,assign(v)} }: independent (one per clique, guards never picked) and
// dominating whenever assign satisfies every edge.
inline VertexSet mids_witness(const BinaryCsp& csp, const CspAssignment& assign,
                              const GadgetGraph& gadget) {
  validate(csp);
  if (!satisfies(csp, assign)) throw NotSatisfying("assignment violates a CSP edge");
  VertexSet picked(gadget.graph.n);
  for (int v = 0; v < (int)gadget.roles.size(); ++v) {
    const VertexRole& role = gadget.roles[v];
    if (role.tag == RoleTag::kChoice && role.symbol == assign[role.var]) picked.set(v);
  }
  return picked;
}

// ---- small graph surgeries ----

// r fresh degree-1 neighbours per original vertex. Pendants of v occupy
// n + v*r .. n + v*r + r - 1.
inline Graph add_pendants(const Graph& g, int r) {
  if (r < 1) throw InvalidInput("pendant count r must be >= 1");
  Graph out(g.n + g.n * r);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.n; ++v)
    for (int t = 0; t < r; ++t) out.add_edge(v, g.n + v * r + t);
  return out;
}

// New last vertex adjacent to everything.
inline Graph add_universal_vertex(const Graph& g) {
  Graph out(g.n + 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.n; ++v) out.add_edge(v, g.n);
  return out;
}

}  // namespace tradeoff::gadgets
