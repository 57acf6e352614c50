#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbea/experiments.hpp"
#include "mbea/graph.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/mbea.hpp"
#include "mbea/oracle.hpp"
#include "mbea/rsg.hpp"
#include "mbea/rsg_ops.hpp"

using namespace mbea;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kBudget = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError(path + ": cannot write");
}

/// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_edge_list(text);
  } catch (const GraphFormatError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const ParameterError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string join(const std::vector<NodeId>& v) {
  std::string s;
  for (NodeId u : v) s += (s.empty() ? "" : " ") + std::to_string(u);
  return s;
}

struct ExpArgs {
  std::vector<double> c;
  std::vector<NodeId> n;
  std::size_t instances = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "csv";
  std::string out;
  NodeId oracle_budget = kDefaultMinCoverBudget;
};

void add_exp_options(CLI::App* cmd, ExpArgs& a) {
  cmd->add_option("--c", a.c, "mean degree (repeatable)");
  cmd->add_option("--n", a.n, "node count (repeatable)");
  cmd->add_option("--instances", a.instances, "instances per grid point")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "base seed");
  cmd->add_option("--workers", a.workers, "worker threads (0 = all cores)");
  cmd->add_option("--format", a.format, "stdout / primary output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", a.out, "report path; the other format is written next to it");
  cmd->add_option("--oracle-budget", a.oracle_budget, "largest n the exact solver accepts");
}

int run_experiment(const std::string& kind, ExpArgs a) {
  ExperimentConfig cfg;
  const bool error = kind == "error";
  cfg.c_grid = a.c.empty() ? (error ? std::vector<double>{2, 4, 6} : std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10})
                           : a.c;
  cfg.n_grid = a.n.empty() ? (error ? std::vector<NodeId>{20, 30, 40, 50, 60} : std::vector<NodeId>{2000}) : a.n;
  cfg.instances = a.instances ? a.instances : (error ? 200 : 100);
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.budgets.min_cover = a.oracle_budget;

  ExperimentReport report = kind == "backbones" ? cmd_backbone_fractions(cfg)
                            : kind == "coverage" ? cmd_coverage(cfg)
                                                 : cmd_error_vs_exact(cfg);
  const std::string csv = to_csv(report);
  const std::string json = to_json(report);
  const bool as_json = a.format == "json";
  if (a.out.empty()) {
    std::cout << (as_json ? json : csv);
  } else {
    write_file(a.out, as_json ? json : csv);
    write_file(std::filesystem::path(a.out).replace_extension(as_json ? ".csv" : ".json").string(), as_json ? csv : json);
  }
  for (const ReportRow& r : report.rows)
    if (r.flagged)
      std::cerr << "warning: c=" << r.c << " n=" << r.n << ": " << r.refusals << " of " << r.instances
                << " oracle runs refused\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backbone and mutual-determination evolution for minimum vertex cover"};
  app.require_subcommand(1);

  GenConfig gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "write a seeded G(N,M) random graph as an edge list");
  gen_cmd->add_option("--n", gen.n, "node count")->required();
  gen_cmd->add_option("--c", gen.mean_degree, "mean degree")->required();
  gen_cmd->add_option("--seed", gen.seed, "seed");
  gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  std::string solve_in, solve_json, solve_dot;
  bool solve_trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "run the algorithm on an edge-list file");
  solve_cmd->add_option("graph", solve_in, "edge-list file")->required();
  solve_cmd->add_flag("--trace", solve_trace, "print one line per added node");
  solve_cmd->add_option("--json", solve_json, "write the final reduced solution graph as JSON");
  solve_cmd->add_option("--dot", solve_dot, "write the final reduced solution graph as DOT");
  solve_cmd->add_option("--out", solve_json, "alias of --json");

  std::string oracle_in;
  NodeId oracle_budget = kDefaultMinCoverBudget;
  NodeId enum_budget = kDefaultEnumerationBudget;
  bool oracle_summary = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum cover size and, for small graphs, all minimum covers");
  oracle_cmd->add_option("graph", oracle_in, "edge-list file")->required();
  oracle_cmd->add_option("--oracle-budget", oracle_budget, "largest n for the exact size");
  oracle_cmd->add_option("--enum-budget", enum_budget, "largest n for the enumeration");
  oracle_cmd->add_flag("--summary", oracle_summary, "print backbones and mutual pairs");

  std::string export_in, export_out;
  auto* export_cmd = app.add_subcommand("export", "convert reduced solution graph JSON to DOT");
  export_cmd->add_option("rsg", export_in, "JSON file from solve --json")->required();
  export_cmd->add_option("--out", export_out, "output path (default stdout)");

  ExpArgs backbones, coverage, error;
  auto* b_cmd = app.add_subcommand("exp-backbones", "mean frozen and unfrozen fractions per mean degree");
  add_exp_options(b_cmd, backbones);
  auto* c_cmd = app.add_subcommand("exp-coverage", "mean coverage ratio per mean degree");
  add_exp_options(c_cmd, coverage);
  auto* e_cmd = app.add_subcommand("exp-error", "mean error against the exact solver");
  add_exp_options(e_cmd, error);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) {
      emit(gen_out, write_edge_list(generate_er(gen)));
    } else if (*solve_cmd) {
      const Graph g = load_graph(solve_in);
      const MbeaResult res = run_mbea(g, solve_trace);
      std::cout << "cover_size " << res.cover_size << "\n";
      std::cout << "cases A=" << res.count(CaseLabel::A) << " B=" << res.count(CaseLabel::B)
                << " C=" << res.count(CaseLabel::C) << " D=" << res.count(CaseLabel::D)
                << " E=" << res.count(CaseLabel::E) << "\n";
      std::cout << "states pos=" << res.rsg.count(NodeState::PositivelyFrozen)
                << " neg=" << res.rsg.count(NodeState::NegativelyFrozen)
                << " unfrozen=" << res.rsg.count(NodeState::Unfrozen) << "\n";
      std::cout << "core_size " << res.rsg.ranks().core_size() << "\n";
      for (const TraceEntry& t : res.trace)
        std::cout << "step " << t.node << " " << to_char(t.label) << " [" << join(t.affected) << "]\n";
      if (!solve_json.empty()) write_file(solve_json, export_json(res.rsg));
      if (!solve_dot.empty()) write_file(solve_dot, export_dot(res.rsg));
    } else if (*oracle_cmd) {
      const Graph g = load_graph(oracle_in);
      if (g.size() <= enum_budget) {
        const SolutionSet s = enumerate_min_covers(g, enum_budget);
        std::cout << "min " << s.min_cover_size << ", " << s.assignments.size() << " solutions\n";
        if (oracle_summary) {
          const SpaceSummary sum = summarize_space(s);
          std::cout << "pos_frozen " << join(sum.pos_frozen) << "\n";
          std::cout << "neg_frozen " << join(sum.neg_frozen) << "\n";
          std::cout << "mutual_pairs";
          for (auto [u, v] : sum.mutual_pairs) std::cout << " " << u << "-" << v;
          std::cout << "\n";
        }
      } else {
        const std::size_t min = exact_min_cover(g, oracle_budget);
        std::cout << "min " << min << "\n";
      }
    } else if (*export_cmd) {
      emit(export_out, export_dot(import_json(read_file(export_in))));
    } else if (*b_cmd) {
      return run_experiment("backbones", backbones);
    } else if (*c_cmd) {
      return run_experiment("coverage", coverage);
    } else if (*e_cmd) {
      return run_experiment("error", error);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
