// Command-line front end: generate instances, run the trade-off schemes,
// verify them against the exact oracles, sweep ratio grids, and build the
// hardness gadgets.
//
// Exit codes: 0 success, 1 failed verification, 2 infeasible instance,
// 3 oracle cap exceeded, 64 bad command line, 65 malformed input data.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tradeoff/enumerate.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/generate.hpp"
#include "tradeoff/io.hpp"
#include "tradeoff/reductions.hpp"
#include "tradeoff/sweep.hpp"

namespace {

using namespace tradeoff;

constexpr int kExitVerifyFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;

// ---- shared option bundles ----

struct SolveOptions {
  std::string problem;
  std::string input;
  std::string format;  // dimacs | matrix | sets; inferred from problem if empty
  double ratio = 0.0;
  double delta = 0.0;
  bool has_ratio = false;
  bool has_delta = false;
  bool json = false;
  bool csv = false;
};

std::string default_format(const std::string& problem) {
  if (problem == "atsp") return "matrix";
  if (problem == "setcover") return "sets";
  return "dimacs";
}

harness::Instance load_instance(const std::string& format, const std::string& path) {
  std::string text = io::read_file(path);
  if (format == "dimacs") return harness::Instance(io::parse_graph(text));
  if (format == "matrix") return harness::Instance(io::parse_metric(text));
  if (format == "sets") return harness::Instance(io::parse_set_system(text));
  throw InvalidInput("unsupported instance format: " + format);
}

void emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

// 1-based indices for everything user-facing, matching the file formats.
std::string solution_string(const std::vector<int>& solution) {
  std::string s;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(solution[i] + 1);
  }
  return s;
}

int run_solve(const SolveOptions& opt, bool verify_mode) {
  if (opt.has_ratio == opt.has_delta)
    throw CLI::ValidationError("exactly one of --ratio/--delta is required");
  double param = opt.has_delta ? opt.delta : opt.ratio;
  std::string format = opt.format.empty() ? default_format(opt.problem) : opt.format;
  harness::Instance inst = load_instance(format, opt.input);
  exact::OracleCaps caps;
  harness::ProblemRun run = harness::run_problem(opt.problem, inst, param, opt.has_delta, caps);

  std::optional<long long> opt_value;
  if (verify_mode) opt_value = harness::oracle_opt(opt.problem, inst, caps);

  harness::SweepRow row =
      harness::make_row(opt.problem, opt.input, inst, run, param, opt_value);

  if (opt.json) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::parse(harness::to_json({row}))[0];
    obj["note"] = run.note;
    obj["solution"] = nlohmann::ordered_json::array();
    for (int v : run.solution) obj["solution"].push_back(v + 1);
    std::cout << obj.dump(2) << "\n";
  } else if (opt.csv) {
    std::cout << harness::to_csv({row});
  } else {
    std::cout << "problem: " << opt.problem << "\n"
              << "instance: " << opt.input << " (size " << row.size << ")\n"
              << (opt.has_delta ? "delta: " : "ratio: ") << harness::format_number(param)
              << "\n"
              << "value: " << run.value << "\n"
              << "guarantee: " << harness::format_number(run.guarantee) << "\n";
    if (opt_value) {
      std::cout << "oracle opt: " << *opt_value << "\n";
      if (row.ratio)
        std::cout << "achieved ratio: " << harness::format_number(*row.ratio) << "\n";
    }
    std::cout << "nodes: " << run.nodes << "\n"
              << "ms: " << harness::format_number(run.ms) << "\n";
    if (!run.note.empty()) std::cout << "note: " << run.note << "\n";
    std::cout << "solution: " << solution_string(run.solution) << "\n";
  }

  if (verify_mode) {
    // Certification inequality for the reported guarantee g: a minimization
    // result passes iff value <= g*opt, a maximization result iff
    // value >= opt/g.
    double g = run.guarantee;
    bool pass = run.minimize ? double(run.value) <= g * double(*opt_value) + 1e-9
                             : double(run.value) * g >= double(*opt_value) - 1e-9;
    std::cout << (pass ? "PASS" : "FAIL") << ": value=" << run.value << " opt=" << *opt_value
              << " guarantee=" << harness::format_number(g) << " ("
              << (run.minimize ? "need value <= guarantee*opt" : "need value >= opt/guarantee")
              << ")\n";
    return pass ? 0 : kExitVerifyFail;
  }
  return 0;
}

int run_generate(const gen::InstanceSpec& spec, const std::string& out_path) {
  std::string text;
  switch (spec.kind) {
    case gen::Kind::kGraph:
      text = io::emit_graph(gen::generate_graph(spec.n, spec.p, spec.seed));
      break;
    case gen::Kind::kMetric:
      text = io::emit_metric(gen::generate_metric(spec.n, spec.seed));
      break;
    case gen::Kind::kCnf:
      text = io::emit_cnf(gen::generate_cnf(spec.n, spec.m, spec.seed));
      break;
    case gen::Kind::kCsp:
      text = io::emit_csp(gen::generate_csp(spec.n, spec.alphabet, spec.m, spec.seed));
      break;
    case gen::Kind::kSetSystem:
      text = io::emit_set_system(gen::generate_set_system(spec.n, spec.m, spec.seed));
      break;
  }
  emit_output(text, out_path);
  return 0;
}

struct SweepOptions {
  std::string problem;
  std::string input;
  std::string format;
  std::vector<double> ratios;
  bool oracle = false;
  bool json = false;
  std::string out;
};

int run_sweep_cmd(const SweepOptions& opt) {
  std::string format = opt.format.empty() ? default_format(opt.problem) : opt.format;
  harness::Instance inst = load_instance(format, opt.input);
  std::vector<harness::SweepRow> rows =
      harness::run_sweep(opt.problem, opt.input, inst, opt.ratios, opt.oracle);
  emit_output(opt.json ? harness::to_json(rows) : harness::to_csv(rows), opt.out);
  return 0;
}

struct ReduceOptions {
  std::string from;
  std::string to;
  std::string input;
  std::string out;  // output basename; empty prints the graph to stdout
  std::string witness;
  int r = 1;
};

int run_reduce(const ReduceOptions& opt) {
  auto emit_gadget = [&](const gadgets::GadgetGraph& gadget, const VertexSet* witness) {
    if (opt.out.empty()) {
      std::cout << io::emit_graph(gadget.graph);
      return;
    }
    io::write_file(opt.out + ".graph", io::emit_graph(gadget.graph));
    io::write_file(opt.out + ".roles", io::emit_roles(gadget));
    std::cout << "wrote " << opt.out << ".graph (" << gadget.graph.n << " vertices, "
              << gadget.graph.edge_count() << " edges) and " << opt.out << ".roles\n";
    if (witness) {
      io::write_file(opt.out + ".witness", solution_string(witness->to_vector()) + "\n");
      std::cout << "wrote " << opt.out << ".witness (" << witness->count()
                << " vertices, verified)\n";
    }
  };

  if (opt.from == "cnf" && opt.to == "ipath") {
    CnfFormula phi = io::parse_cnf(io::read_file(opt.input));
    gadgets::GadgetGraph gadget = gadgets::sat_to_induced_path(phi, opt.r);
    if (!opt.witness.empty()) {
      BoolAssignment tau =
          io::parse_bool_assignment(io::read_file(opt.witness), phi.num_vars);
      VertexSet w = gadgets::induced_path_witness(phi, tau, opt.r);
      if (!is_feasible(gadget.graph, w, ProblemKind::InducedPath))
        throw std::logic_error("witness is not an induced path");
      if ((long long)w.count() != 2LL * opt.r * (long long)phi.clauses.size())
        throw std::logic_error("witness size != 2rm");
      emit_gadget(gadget, &w);
    } else {
      emit_gadget(gadget, nullptr);
    }
    return 0;
  }
  if (opt.from == "csp" && opt.to == "mids") {
    BinaryCsp csp = io::parse_csp(io::read_file(opt.input));
    gadgets::GadgetGraph gadget = gadgets::csp_to_mids(csp, opt.r);
    if (!opt.witness.empty()) {
      CspAssignment assign =
          io::parse_csp_assignment(io::read_file(opt.witness), csp.num_vars, csp.alphabet);
      VertexSet w = gadgets::mids_witness(csp, assign, gadget);
      if (!is_feasible(gadget.graph, w, ProblemKind::IndependentDominatingSet))
        throw std::logic_error("witness is not an independent dominating set");
      emit_gadget(gadget, &w);
    } else {
      emit_gadget(gadget, nullptr);
    }
    return 0;
  }
  if (opt.from == "graph" && (opt.to == "mmvc" || opt.to == "itree")) {
    if (!opt.witness.empty())
      throw CLI::ValidationError("--witness applies to cnf/csp reductions only");
    Graph g = io::parse_graph(io::read_file(opt.input));
    Graph out = opt.to == "mmvc" ? gadgets::add_pendants(g, opt.r)
                                 : gadgets::add_universal_vertex(g);
    if (opt.out.empty()) {
      std::cout << io::emit_graph(out);
    } else {
      io::write_file(opt.out + ".graph", io::emit_graph(out));
      std::cout << "wrote " << opt.out << ".graph (" << out.n << " vertices, "
                << out.edge_count() << " edges)\n";
    }
    return 0;
  }
  throw CLI::ValidationError("unsupported reduction " + opt.from + " -> " + opt.to);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-approximation trade-off schemes: solvers, oracles, gadgets"};
  app.require_subcommand(1);

  // generate
  gen::InstanceSpec spec;
  std::string gen_kind, gen_out;
  CLI::App* cmd_gen = app.add_subcommand("generate", "emit a seeded random instance");
  cmd_gen->add_option("--kind", gen_kind, "graph | cnf | csp | metric | sets")
      ->required()
      ->check(CLI::IsMember({"graph", "cnf", "csp", "metric", "sets"}));
  cmd_gen->add_option("--n", spec.n, "vertices / variables / cities / universe size")
      ->required();
  cmd_gen->add_option("--m", spec.m, "clauses / CSP edges / sets");
  cmd_gen->add_option("--p", spec.p, "G(n,p) edge probability (default 0.5)");
  cmd_gen->add_option("--alphabet", spec.alphabet, "CSP alphabet size (default 2)");
  cmd_gen->add_option("--seed", spec.seed, "RNG seed (default 0)");
  cmd_gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve / verify share their flag set
  SolveOptions solve_opt, verify_opt;
  auto add_solve_flags = [](CLI::App* cmd, SolveOptions& opt) {
    cmd->add_option("--problem", opt.problem, "mids|mmvc|ipath|itree|iforest|mis|atsp|grundy|setcover")
        ->required()
        ->check(CLI::IsMember({"mids", "mmvc", "ipath", "itree", "iforest", "mis", "atsp",
                               "grundy", "setcover"}));
    cmd->add_option("--input", opt.input, "instance file")->required();
    cmd->add_option("--format", opt.format, "dimacs | matrix | sets (default per problem)")
        ->check(CLI::IsMember({"dimacs", "matrix", "sets"}));
    CLI::Option* r = cmd->add_option("--ratio", opt.ratio, "target approximation ratio");
    CLI::Option* d = cmd->add_option("--delta", opt.delta, "set-cover m^delta exponent");
    r->excludes(d);
  };
  CLI::App* cmd_solve = app.add_subcommand("solve", "run a trade-off scheme");
  add_solve_flags(cmd_solve, solve_opt);
  cmd_solve->add_flag("--json", solve_opt.json, "emit a JSON report");
  cmd_solve->add_flag("--csv", solve_opt.csv, "emit a CSV report");
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run a scheme plus the exact oracle and check the ratio");
  add_solve_flags(cmd_verify, verify_opt);

  // sweep
  SweepOptions sweep_opt;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "run one instance over a ratio grid");
  cmd_sweep->add_option("--problem", sweep_opt.problem, "problem name")
      ->required()
      ->check(CLI::IsMember({"mids", "mmvc", "ipath", "itree", "iforest", "mis", "atsp",
                             "grundy", "setcover"}));
  cmd_sweep->add_option("--input", sweep_opt.input, "instance file")->required();
  cmd_sweep->add_option("--format", sweep_opt.format, "dimacs | matrix | sets");
  cmd_sweep->add_option("--ratios", sweep_opt.ratios, "comma-separated ratio list")
      ->required()
      ->delimiter(',');
  cmd_sweep->add_flag("--oracle", sweep_opt.oracle, "also compute exact optima");
  cmd_sweep->add_flag("--json", sweep_opt.json, "emit JSON instead of CSV");
  cmd_sweep->add_option("--out", sweep_opt.out, "output file (default stdout)");

  // reduce
  ReduceOptions red_opt;
  CLI::App* cmd_reduce = app.add_subcommand("reduce", "build a hardness gadget");
  cmd_reduce->add_option("--from", red_opt.from, "cnf | csp | graph")
      ->required()
      ->check(CLI::IsMember({"cnf", "csp", "graph"}));
  cmd_reduce->add_option("--to", red_opt.to, "ipath | mids | mmvc | itree")
      ->required()
      ->check(CLI::IsMember({"ipath", "mids", "mmvc", "itree"}));
  cmd_reduce->add_option("--r", red_opt.r, "replication / pendant count (default 1)");
  cmd_reduce->add_option("--input", red_opt.input, "source instance file")->required();
  cmd_reduce->add_option("--out", red_opt.out, "output basename (default: graph to stdout)");
  cmd_reduce->add_option("--witness", red_opt.witness, "assignment file; emit + verify witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) {
      if (gen_kind == "graph") spec.kind = gen::Kind::kGraph;
      if (gen_kind == "cnf") spec.kind = gen::Kind::kCnf;
      if (gen_kind == "csp") spec.kind = gen::Kind::kCsp;
      if (gen_kind == "metric") spec.kind = gen::Kind::kMetric;
      if (gen_kind == "sets") spec.kind = gen::Kind::kSetSystem;
      return run_generate(spec, gen_out);
    }
    if (cmd_solve->parsed()) {
      solve_opt.has_ratio = cmd_solve->count("--ratio") > 0;
      solve_opt.has_delta = cmd_solve->count("--delta") > 0;
      return run_solve(solve_opt, /*verify_mode=*/false);
    }
    if (cmd_verify->parsed()) {
      verify_opt.has_ratio = cmd_verify->count("--ratio") > 0;
      verify_opt.has_delta = cmd_verify->count("--delta") > 0;
      return run_solve(verify_opt, /*verify_mode=*/true);
    }
    if (cmd_sweep->parsed()) return run_sweep_cmd(sweep_opt);
    if (cmd_reduce->parsed()) return run_reduce(red_opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadData;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
