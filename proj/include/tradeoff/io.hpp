#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tradeoff/cnf.hpp"
#include "tradeoff/csp.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/metric.hpp"
#include "tradeoff/reductions.hpp"
#include "tradeoff/set_system.hpp"

namespace tradeoff::io {

// ---- line scanning ----

namespace detail {

// Splits text into lines, hands each non-blank line to the caller as an
// already-positioned token stream. ParseError lines are 1-based.
struct LineScanner {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  explicit LineScanner(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  int line_no() const { return (int)pos; }  // 1-based number of the line just taken

  // Next non-blank, non-comment line, or false at end of input.
  bool next(std::istringstream& out, bool skip_comments = false) {
    while (pos < lines.size()) {
      const std::string& raw = lines[pos++];
      std::istringstream ss(raw);
      std::string head;
      if (!(ss >> head)) continue;  // blank
      if (skip_comments && head == "c") continue;
      ss.clear();
      ss.seekg(0);
      out.str(raw);
      out.clear();
      return true;
    }
    return false;
  }
};

inline long long want_int(std::istringstream& ss, int line, const char* what) {
  long long v;
  if (!(ss >> v)) throw ParseError(line, std::string("expected ") + what);
  return v;
}

inline void want_end(std::istringstream& ss, int line) {
  std::string extra;
  if (ss >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace detail

// ---- DIMACS graphs ----
// "c" comment lines, one "p edge <n> <m>" header, then m lines "e <u> <v>"
// with 1-based endpoints.

inline Graph parse_graph(const std::string& text) {
  detail::LineScanner sc(text);
  std::istringstream ss;
  Graph g;
  long long declared_edges = -1;
  long long seen = 0;
  while (sc.next(ss, /*skip_comments=*/true)) {
    int line = sc.line_no();
    std::string kind;
    ss >> kind;
    if (kind == "p") {
      if (declared_edges >= 0) throw ParseError(line, "duplicate problem line");
      std::string fmt;
      if (!(ss >> fmt) || fmt != "edge") throw ParseError(line, "expected 'p edge n m'");
      long long n = detail::want_int(ss, line, "vertex count");
      declared_edges = detail::want_int(ss, line, "edge count");
      detail::want_end(ss, line);
      if (n < 0) throw ParseError(line, "negative vertex count");
      g = Graph((int)n);
    } else if (kind == "e") {
      if (declared_edges < 0) throw ParseError(line, "edge before problem line");
      long long u = detail::want_int(ss, line, "endpoint");
      long long v = detail::want_int(ss, line, "endpoint");
      detail::want_end(ss, line);
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        throw ParseError(line, "endpoint out of range");
      if (u == v) throw ParseError(line, "self-loop");
      if (g.has_edge((int)u - 1, (int)v - 1)) throw ParseError(line, "duplicate edge");
      g.add_edge((int)u - 1, (int)v - 1);
      ++seen;
    } else {
      throw ParseError(line, "unknown line kind '" + kind + "'");
    }
  }
  if (declared_edges < 0) throw ParseError((int)sc.lines.size() + 1, "missing problem line");
  if (seen != declared_edges)
    throw ParseError((int)sc.lines.size() + 1, "edge count mismatch: declared " +
                                                   std::to_string(declared_edges) + ", found " +
                                                   std::to_string(seen));
  return g;
}

inline std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

// ---- DIMACS CNF ----
// "p cnf <vars> <clauses>", then zero-terminated clause lines.

inline CnfFormula parse_cnf(const std::string& text) {
  detail::LineScanner sc(text);
  std::istringstream ss;
  CnfFormula phi;
  bool have_header = false;
  long long declared = 0;
  Clause open;  // clauses may span lines until their 0 terminator
  bool in_clause = false;
  while (sc.next(ss, /*skip_comments=*/true)) {
    int line = sc.line_no();
    if (!have_header) {
      std::string p, fmt;
      if (!(ss >> p) || p != "p" || !(ss >> fmt) || fmt != "cnf")
        throw ParseError(line, "expected 'p cnf vars clauses'");
      long long nv = detail::want_int(ss, line, "variable count");
      declared = detail::want_int(ss, line, "clause count");
      detail::want_end(ss, line);
      if (nv < 0) throw ParseError(line, "negative variable count");
      phi.num_vars = (int)nv;
      have_header = true;
      continue;
    }
    long long lit;
    while (ss >> lit) {
      if (lit == 0) {
        phi.clauses.push_back(open);
        open.lits.clear();
        in_clause = false;
      } else {
        open.lits.push_back((int)lit);
        in_clause = true;
      }
    }
    if (!ss.eof()) throw ParseError(line, "expected integer literal");
  }
  int tail = (int)sc.lines.size() + 1;
  if (!have_header) throw ParseError(tail, "missing problem line");
  if (in_clause) throw ParseError(tail, "unterminated clause");
  if ((long long)phi.clauses.size() != declared)
    throw ParseError(tail, "clause count mismatch: declared " + std::to_string(declared) +
                               ", found " + std::to_string(phi.clauses.size()));
  try {
    validate(phi);
  } catch (const InvalidInput& e) {
    throw ParseError(tail, e.what());
  }
  return phi;
}

inline std::string emit_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
  for (const Clause& c : phi.clauses) {
    for (int lit : c.lits) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

// ---- metrics ----
// First line n, then n rows of n integers. The diagonal may be written as the
// sentinel -1 (treated as the mandatory 0); -1 anywhere else is an error.

inline Metric parse_metric(const std::string& text) {
  detail::LineScanner sc(text);
  std::istringstream ss;
  if (!sc.next(ss)) throw ParseError(1, "missing size line");
  int line = sc.line_no();
  long long n = detail::want_int(ss, line, "matrix size");
  detail::want_end(ss, line);
  if (n < 0) throw ParseError(line, "negative matrix size");
  Metric m;
  m.n = (int)n;
  m.dist.assign(m.n, std::vector<long long>(m.n, 0));
  for (int i = 0; i < m.n; ++i) {
    if (!sc.next(ss)) throw ParseError((int)sc.lines.size() + 1, "missing matrix row");
    line = sc.line_no();
    for (int j = 0; j < m.n; ++j) {
      long long d = detail::want_int(ss, line, "distance");
      if (d == -1 && i == j) d = 0;
      if (d < 0) throw ParseError(line, "negative distance");
      m.dist[i][j] = d;
    }
    detail::want_end(ss, line);
  }
  std::istringstream extra;
  if (sc.next(extra)) throw ParseError(sc.line_no(), "unexpected extra row");
  try {
    validate_shape(m);
  } catch (const InvalidInput& e) {
    throw ParseError(line, e.what());
  }
  return m;
}

inline std::string emit_metric(const Metric& m) {
  std::ostringstream out;
  out << m.n << "\n";
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out << m.dist[i][j] << (j + 1 < m.n ? " " : "");
    out << "\n";
  }
  return out.str();
}

// ---- set systems ----
// First line "n m", then m lines "k e1 ... ek" with 1-based elements.

inline SetSystem parse_set_system(const std::string& text) {
  detail::LineScanner sc(text);
  std::istringstream ss;
  if (!sc.next(ss)) throw ParseError(1, "missing header line");
  int line = sc.line_no();
  long long n = detail::want_int(ss, line, "universe size");
  long long m = detail::want_int(ss, line, "set count");
  detail::want_end(ss, line);
  if (n < 0 || m < 0) throw ParseError(line, "negative size");
  SetSystem sys;
  sys.universe = (int)n;
  for (int i = 0; i < m; ++i) {
    if (!sc.next(ss)) throw ParseError((int)sc.lines.size() + 1, "missing set line");
    line = sc.line_no();
    long long k = detail::want_int(ss, line, "set size");
    if (k < 0) throw ParseError(line, "negative set size");
    VertexSet s(sys.universe);
    for (int t = 0; t < k; ++t) {
      long long e = detail::want_int(ss, line, "element");
      if (e < 1 || e > n) throw ParseError(line, "element out of range");
      if (s.test((int)e - 1)) throw ParseError(line, "repeated element");
      s.set((int)e - 1);
    }
    detail::want_end(ss, line);
    sys.sets.push_back(std::move(s));
  }
  std::istringstream extra;
  if (sc.next(extra)) throw ParseError(sc.line_no(), "unexpected extra line");
  return sys;
}

inline std::string emit_set_system(const SetSystem& sys) {
  std::ostringstream out;
  out << sys.universe << " " << sys.sets.size() << "\n";
  for (const VertexSet& s : sys.sets) {
    out << s.count();
    s.for_each([&](int e) { out << " " << e + 1; });
    out << "\n";
  }
  return out.str();
}

// ---- binary CSPs ----
// First line "n s e"; per edge one line "u v k p1a p1b ... pka pkb" with
// 1-based endpoints and 0-based symbol values.

inline BinaryCsp parse_csp(const std::string& text) {
  detail::LineScanner sc(text);
  std::istringstream ss;
  if (!sc.next(ss)) throw ParseError(1, "missing header line");
  int line = sc.line_no();
  long long n = detail::want_int(ss, line, "variable count");
  long long s = detail::want_int(ss, line, "alphabet size");
  long long e = detail::want_int(ss, line, "edge count");
  detail::want_end(ss, line);
  if (n < 0 || s < 1 || e < 0) throw ParseError(line, "bad header sizes");
  BinaryCsp csp;
  csp.num_vars = (int)n;
  csp.alphabet = (int)s;
  for (int i = 0; i < e; ++i) {
    if (!sc.next(ss)) throw ParseError((int)sc.lines.size() + 1, "missing edge line");
    line = sc.line_no();
    CspEdge edge;
    long long u = detail::want_int(ss, line, "endpoint");
    long long v = detail::want_int(ss, line, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "endpoint out of range");
    edge.u = (int)u - 1;
    edge.v = (int)v - 1;
    long long k = detail::want_int(ss, line, "pair count");
    if (k < 0) throw ParseError(line, "negative pair count");
    for (int t = 0; t < k; ++t) {
      long long a = detail::want_int(ss, line, "symbol");
      long long b = detail::want_int(ss, line, "symbol");
      if (a < 0 || a >= s || b < 0 || b >= s) throw ParseError(line, "symbol out of range");
      edge.allowed.emplace_back((int)a, (int)b);
    }
    detail::want_end(ss, line);
    csp.edges.push_back(std::move(edge));
  }
  std::istringstream extra;
  if (sc.next(extra)) throw ParseError(sc.line_no(), "unexpected extra line");
  try {
    validate(csp);
  } catch (const InvalidInput& err) {
    throw ParseError((int)sc.lines.size() + 1, err.what());
  }
  return csp;
}

inline std::string emit_csp(const BinaryCsp& csp) {
  std::ostringstream out;
  out << csp.num_vars << " " << csp.alphabet << " " << csp.edges.size() << "\n";
  for (const CspEdge& e : csp.edges) {
    out << e.u + 1 << " " << e.v + 1 << " " << e.allowed.size();
    for (auto [a, b] : e.allowed) out << " " << a << " " << b;
    out << "\n";
  }
  return out.str();
}

// ---- gadget role sidecar ----
// One line per vertex: 1-based index, role tag, parameters.

inline std::string emit_roles(const gadgets::GadgetGraph& gadget) {
  std::ostringstream out;
  for (int v = 0; v < (int)gadget.roles.size(); ++v)
    out << v + 1 << " " << gadgets::describe(gadget.roles[v]) << "\n";
  return out.str();
}

// ---- assignment files ----
// Whitespace-separated values: 0/1 per variable for CNF, a symbol per
// variable for CSPs.

inline BoolAssignment parse_bool_assignment(const std::string& text, int num_vars) {
  std::istringstream ss(text);
  BoolAssignment tau;
  long long v;
  while (ss >> v) {
    if (v != 0 && v != 1) throw ParseError(1, "assignment values must be 0 or 1");
    tau.push_back((char)v);
  }
  if (!ss.eof()) throw ParseError(1, "expected 0/1 value");
  if ((int)tau.size() != num_vars)
    throw ParseError(1, "expected " + std::to_string(num_vars) + " values, found " +
                            std::to_string(tau.size()));
  return tau;
}

inline CspAssignment parse_csp_assignment(const std::string& text, int num_vars, int alphabet) {
  std::istringstream ss(text);
  CspAssignment assign;
  long long v;
  while (ss >> v) {
    if (v < 0 || v >= alphabet) throw ParseError(1, "symbol out of range");
    assign.push_back((int)v);
  }
  if (!ss.eof()) throw ParseError(1, "expected symbol value");
  if ((int)assign.size() != num_vars)
    throw ParseError(1, "expected " + std::to_string(num_vars) + " values, found " +
                            std::to_string(assign.size()));
  return assign;
}

// ---- files ----

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << content;
}

}  // namespace tradeoff::io
