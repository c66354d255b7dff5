#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/exact.hpp"
#include "tradeoff/graph.hpp"
#include "tradeoff/metric.hpp"
#include "tradeoff/schemes.hpp"
#include "tradeoff/set_system.hpp"

namespace tradeoff::harness {

using Instance = std::variant<Graph, Metric, SetSystem>;

// One scheme execution with the problem-specific report flattened out, so
// solve/verify/sweep can share a single dispatch.
struct ProblemRun {
  long long value = 0;
  double guarantee = 1.0;
  std::uint64_t nodes = 0;
  double ms = 0.0;
  std::string note;
  std::vector<int> solution;  // vertices, tour order, or chosen set indices
  bool minimize = false;
};

inline const char* const kProblems[] = {"mids", "mmvc",   "ipath",  "itree", "iforest",
                                        "mis",  "atsp",   "grundy", "setcover"};

inline bool problem_known(const std::string& p) {
  for (const char* q : kProblems)
    if (p == q) return true;
  return false;
}

inline bool problem_minimizes(const std::string& p) {
  return p == "mids" || p == "atsp" || p == "setcover";
}

namespace detail {

inline const Graph& want_graph(const Instance& inst, const std::string& problem) {
  if (const Graph* g = std::get_if<Graph>(&inst)) return *g;
  throw InvalidInput(problem + " needs a graph instance");
}

inline const Metric& want_metric(const Instance& inst, const std::string& problem) {
  if (const Metric* m = std::get_if<Metric>(&inst)) return *m;
  throw InvalidInput(problem + " needs a distance matrix instance");
}

inline const SetSystem& want_sets(const Instance& inst, const std::string& problem) {
  if (const SetSystem* s = std::get_if<SetSystem>(&inst)) return *s;
  throw InvalidInput(problem + " needs a set system instance");
}

// mmvc and the block-partition scheme take integer parameters; a real target
// ratio rounds up so the guarantee still covers it.
inline int whole_ratio(double r) { return std::max(1, (int)std::ceil(r - 1e-9)); }

template <class S>
inline ProblemRun from_report(const schemes::Report<S>& rep, bool minimize) {
  ProblemRun run;
  run.value = rep.value;
  run.guarantee = rep.guarantee;
  run.nodes = rep.nodes_enumerated;
  run.ms = rep.wall_time_ms;
  run.note = rep.note;
  run.minimize = minimize;
  if constexpr (std::is_same_v<S, VertexSet>)
    run.solution = rep.solution.to_vector();
  else if constexpr (std::is_same_v<S, schemes::Tour>)
    run.solution = rep.solution.order;
  else
    run.solution = rep.solution;
  return run;
}

}  // namespace detail

// `param` is the target ratio, or the exponent delta when `use_delta` is set
// (set cover only).
inline ProblemRun run_problem(const std::string& problem, const Instance& inst, double param,
                              bool use_delta, const exact::OracleCaps& caps = {}) {
  if (use_delta && problem != "setcover")
    throw InvalidInput("--delta applies to setcover only");
  if (problem == "mids")
    return detail::from_report(
        schemes::generic_min_scheme(detail::want_graph(inst, problem),
                                    ProblemKind::IndependentDominatingSet, param),
        true);
  if (problem == "mmvc")
    return detail::from_report(
        schemes::mmvc_scheme(detail::want_graph(inst, problem), detail::whole_ratio(param)),
        false);
  if (problem == "ipath")
    return detail::from_report(schemes::generic_max_scheme(detail::want_graph(inst, problem),
                                                           ProblemKind::InducedPath, param),
                               false);
  if (problem == "itree")
    return detail::from_report(schemes::generic_max_scheme(detail::want_graph(inst, problem),
                                                           ProblemKind::InducedTree, param),
                               false);
  if (problem == "iforest")
    return detail::from_report(schemes::generic_max_scheme(detail::want_graph(inst, problem),
                                                           ProblemKind::InducedForest, param),
                               false);
  if (problem == "mis")
    return detail::from_report(
        schemes::partition_scheme_mis(detail::want_graph(inst, problem),
                                      detail::whole_ratio(param), caps),
        false);
  if (problem == "atsp")
    return detail::from_report(
        schemes::atsp_scheme(detail::want_metric(inst, problem), param, caps), true);
  if (problem == "grundy")
    return detail::from_report(
        schemes::grundy_scheme(detail::want_graph(inst, problem), param, caps), false);
  if (problem == "setcover") {
    const SetSystem& sys = detail::want_sets(inst, problem);
    if (use_delta) return detail::from_report(schemes::setcover_mdelta(sys, param, caps), true);
    schemes::detail::Stopwatch clock;
    schemes::CoverResult cover = schemes::setcover_merge_approx(sys, param, caps);
    ProblemRun run;
    run.value = cover.size;
    run.solution = cover.sets;
    run.nodes = cover.enumerated;
    run.guarantee = std::max(1, (int)(param + 1e-9));
    run.ms = clock.ms();
    run.minimize = true;
    return run;
  }
  throw InvalidInput("unknown problem: " + problem);
}

inline long long oracle_opt(const std::string& problem, const Instance& inst,
                            const exact::OracleCaps& caps = {}) {
  if (problem == "mids")
    return exact::min_ids_exact(detail::want_graph(inst, problem), caps).size;
  if (problem == "mmvc")
    return exact::max_minimal_vc_exact(detail::want_graph(inst, problem), caps).size;
  if (problem == "ipath")
    return exact::max_induced_exact(detail::want_graph(inst, problem), ProblemKind::InducedPath,
                                    caps)
        .size;
  if (problem == "itree")
    return exact::max_induced_exact(detail::want_graph(inst, problem), ProblemKind::InducedTree,
                                    caps)
        .size;
  if (problem == "iforest")
    return exact::max_induced_exact(detail::want_graph(inst, problem),
                                    ProblemKind::InducedForest, caps)
        .size;
  if (problem == "mis")
    return exact::max_independent_set_exact(detail::want_graph(inst, problem), caps).size;
  if (problem == "atsp") return exact::held_karp(detail::want_metric(inst, problem), caps).cost;
  if (problem == "grundy") return exact::grundy_exact(detail::want_graph(inst, problem), caps).number;
  if (problem == "setcover")
    return exact::set_cover_exact(detail::want_sets(inst, problem), caps).size;
  throw InvalidInput("unknown problem: " + problem);
}

inline int instance_size(const Instance& inst) {
  if (const Graph* g = std::get_if<Graph>(&inst)) return g->n;
  if (const Metric* m = std::get_if<Metric>(&inst)) return m->n;
  return std::get<SetSystem>(inst).m();
}

// ---- sweep rows ----

struct SweepRow {
  std::string problem;
  std::string instance;
  int size = 0;
  double r = 1.0;  // target ratio, or delta for the m^delta pipeline
  double guarantee = 1.0;
  long long value = 0;
  std::optional<long long> opt;
  std::optional<double> ratio;  // achieved: value/opt (min) or opt/value (max)
  std::uint64_t nodes = 0;
  double ms = 0.0;
};

inline std::optional<double> achieved_ratio(const ProblemRun& run, long long opt) {
  if (run.minimize) {
    if (opt == 0) return run.value == 0 ? std::optional<double>(1.0) : std::nullopt;
    return double(run.value) / double(opt);
  }
  if (run.value == 0) return opt == 0 ? std::optional<double>(1.0) : std::nullopt;
  return double(opt) / double(run.value);
}

inline SweepRow make_row(const std::string& problem, const std::string& instance_id,
                         const Instance& inst, const ProblemRun& run, double param,
                         std::optional<long long> opt) {
  SweepRow row;
  row.problem = problem;
  row.instance = instance_id;
  row.size = instance_size(inst);
  row.r = param;
  row.guarantee = run.guarantee;
  row.value = run.value;
  row.nodes = run.nodes;
  row.ms = run.ms;
  if (opt) {
    row.opt = opt;
    row.ratio = achieved_ratio(run, *opt);
  }
  return row;
}

inline std::vector<SweepRow> run_sweep(const std::string& problem,
                                       const std::string& instance_id, const Instance& inst,
                                       std::vector<double> ratios, bool with_oracle,
                                       const exact::OracleCaps& caps = {}) {
  std::optional<long long> opt;
  if (with_oracle) opt = oracle_opt(problem, inst, caps);
  std::vector<SweepRow> rows;
  for (double r : ratios) {
    ProblemRun run = run_problem(problem, inst, r, /*use_delta=*/false, caps);
    rows.push_back(make_row(problem, instance_id, inst, run, r, opt));
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    return a.r < b.r;
  });
  return rows;
}

// ---- report emission ----

// Integral doubles print as integers so rerunning a sweep stays byte-stable;
// everything else gets shortest-ish fixed significant digits.
inline std::string format_number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", x);
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline const char* kCsvHeader = "problem,instance,size,r,guarantee,value,opt,ratio,nodes,ms";

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += "\n";
  for (const SweepRow& row : rows) {
    out += row.problem + "," + row.instance + "," + std::to_string(row.size) + "," +
           format_number(row.r) + "," + format_number(row.guarantee) + "," +
           std::to_string(row.value) + ",";
    if (row.opt) out += std::to_string(*row.opt);
    out += ",";
    if (row.ratio) out += format_number(*row.ratio);
    out += "," + std::to_string(row.nodes) + "," + format_number(row.ms) + "\n";
  }
  return out;
}

inline std::string to_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["problem"] = row.problem;
    obj["instance"] = row.instance;
    obj["size"] = row.size;
    obj["r"] = row.r;
    obj["guarantee"] = row.guarantee;
    obj["value"] = row.value;
    if (row.opt)
      obj["opt"] = *row.opt;
    else
      obj["opt"] = nullptr;
    if (row.ratio)
      obj["ratio"] = *row.ratio;
    else
      obj["ratio"] = nullptr;
    obj["nodes"] = row.nodes;
    obj["ms"] = row.ms;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

}  // namespace tradeoff::harness
