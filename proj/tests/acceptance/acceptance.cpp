// Acceptance run: one PASS/FAIL line per criterion.
//
//   mbea_acceptance [--only 1,2,...] [--known-failure 5,...]
//
// Exit status is 0 when every failing criterion is listed as a known failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbea/experiments.hpp"
#include "mbea/graph.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/mbea.hpp"
#include "mbea/oracle.hpp"
#include "mbea/random.hpp"
#include "mbea/rsg_ops.hpp"
#include "rsg_fixture.hpp"

using namespace mbea;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Represented space equals the exact space on core-free graphs.
Outcome core_free_exactness() {
  const int wanted = 200;
  int checked = 0, equal = 0;
  std::string first_bad;
  for (std::uint64_t i = 0; checked < wanted; ++i) {
    const Graph g = generate_er({24, 2.0, derive_seed(1001, {i})});
    if (!leaf_removal_ranks(g).core_empty()) continue;
    ++checked;
    const SolutionSet mine = enumerate_assignments(run_mbea(g).rsg);
    const SolutionSet exact = enumerate_min_covers(g, 24);
    const SpaceDiff d = diff_spaces(mine, exact);
    const bool ok = d.equal && d.size_delta == 0 && d.summaries_equal &&
                    d.candidate_summary.solution_count == d.reference_summary.solution_count;
    equal += ok;
    if (!ok && first_bad.empty()) first_bad = ", first mismatch at draw " + std::to_string(i);
  }
  return {equal == checked, std::to_string(equal) + "/" + std::to_string(checked) +
                                " core-free instances identical (n=24, c=2, exact)" + first_bad};
}

// 2. Mean error against the exact optimum.
Outcome error_vs_exact() {
  ExperimentConfig cfg;
  cfg.c_grid = {2, 4, 6};
  cfg.n_grid = {20, 30, 40, 50, 60};
  cfg.instances = 200;
  cfg.seed = 2002;
  cfg.workers = 0;
  const ExperimentReport r = cmd_error_vs_exact(cfg);
  bool pass = true;
  double worst2 = 0, worst46 = 0;
  for (const ReportRow& row : r.rows) {
    const double tol = row.c == 2 ? 0.01 : 0.05;
    const double e = row.err_mean.value_or(1.0);
    pass &= e <= tol && row.refusals == 0;
    (row.c == 2 ? worst2 : worst46) = std::max(row.c == 2 ? worst2 : worst46, e);
  }
  return {pass, "max mean error " + fmt("%.4f", worst2) + " at c=2 (tol 0.01), " + fmt("%.4f", worst46) +
                    " at c=4,6 (tol 0.05); 15 points x 200 instances"};
}

// 3. Complete graphs and even cycles.
Outcome golden_structures() {
  bool pass = true;
  std::string bad;
  auto count_doubles = [](const ReducedSolutionGraph& rsg) {
    std::size_t k = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(rsg.graph().edge_count()); ++e) k += rsg.constrains_pair(e);
    return k;
  };
  for (NodeId n : {3, 5, 8}) {
    const MbeaResult r = run_mbea(complete_graph(n));
    const bool ok = r.cover_size == static_cast<std::size_t>(n - 1) &&
                    enumerate_assignments(r.rsg).assignments.size() == 2;
    if (!ok) bad += " K" + std::to_string(n);
    pass &= ok;
  }
  for (NodeId half : {2, 3, 5}) {
    const MbeaResult r = run_mbea(cycle_graph(2 * half));
    bool ok = r.cover_size == static_cast<std::size_t>(half) &&
              enumerate_assignments(r.rsg).assignments.size() == 2 &&
              r.rsg.count(NodeState::Unfrozen) == static_cast<std::size_t>(2 * half) &&
              count_doubles(r.rsg) == static_cast<std::size_t>(half);
    for (NodeId u = 0; u < 2 * half; ++u) {
      int partners = 0;
      for (EdgeId e : r.rsg.graph().incident_edges(u)) partners += r.rsg.constrains_pair(e);
      ok &= partners == 1;
    }
    if (!ok) bad += " C" + std::to_string(2 * half);
    pass &= ok;
  }
  return {pass, "K3 K5 K8 cover N-1 with 2 solutions; C4 C6 C10 cover N with 2 solutions, alternating doubles" +
                    (bad.empty() ? std::string() : "; failed:" + bad)};
}

// 4. Backbone fractions move monotonically with c.
Outcome backbone_trend() {
  ExperimentConfig cfg;
  cfg.c_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  cfg.n_grid = {2000};
  cfg.instances = 100;
  cfg.seed = 4004;
  cfg.workers = 0;
  const ExperimentReport r = cmd_backbone_fractions(cfg);
  bool pass = true;
  std::string neg = "neg", pos = "pos";
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    neg += " " + fmt("%.3f", r.rows[k].neg_frac);
    pos += " " + fmt("%.3f", r.rows[k].pos_frac);
    if (k) {
      pass &= r.rows[k].neg_frac >= r.rows[k - 1].neg_frac;
      pass &= r.rows[k].pos_frac <= r.rows[k - 1].pos_frac;
    }
  }
  return {pass, "c=1..10, n=2000, 100 instances: " + neg + "; " + pos};
}

// 5. Runtime exponent at c = 4.
Outcome runtime_scaling() {
  const std::vector<NodeId> sizes{1000, 2000, 4000, 8000};
  const int reps = 3;
  std::vector<double> lx, ly;
  std::string times;
  for (NodeId n : sizes) {
    std::vector<double> t;
    for (int k = 0; k < reps; ++k) {
      const Graph g = generate_er({n, 4.0, derive_seed(5005, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)})});
      const auto t0 = std::chrono::steady_clock::now();
      const MbeaResult res = run_mbea(g);
      t.push_back(seconds_since(t0));
      if (res.cover_size == 0) return {false, "empty cover"};
    }
    std::sort(t.begin(), t.end());
    const double med = t[t.size() / 2];
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(med));
    times += " N=" + std::to_string(n) + ":" + fmt("%.2fs", med);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  const double slope = sxy / sxx;
  return {slope <= 2.3, "log-log slope " + fmt("%.2f", slope) + " (tol 2.3), median of " + std::to_string(reps) + ":" + times};
}

// 6. Property suites.
Outcome properties() {
  std::size_t steps = 0, violations = 0;
  for (std::uint64_t s = 0; steps < 10000; ++s) {
    auto g = std::make_shared<const Graph>(generate_er(
        {10 + static_cast<NodeId>(s % 21), 1.0 + static_cast<double>(s % 6), derive_seed(6006, {s})}));
    auto ranks = std::make_shared<const RankAssignment>(leaf_removal_ranks(*g));
    MbeaOptions opt;
    opt.observer = [&](const ReducedSolutionGraph& rsg, const TraceEntry&) {
      ++steps;
      violations += !validate(rsg).empty();
    };
    run_mbea(g, ranks, opt);
  }

  std::size_t order_mismatch = 0, order_checks = 0;
  Rng rng(6007);
  for (int inst = 0; inst < 100; ++inst) {
    auto rsg = fixture::random_rsg(rng, 16, 2.5, 0.4);
    std::vector<NodeId> targets;
    for (NodeId u = 0; u < rsg.size(); ++u)
      if (rng.uniform_inclusive(2) == 0) targets.push_back(u);
    const bool ref = compatible_minus_one(rsg, targets);
    for (std::uint64_t order = 0; order < 100; ++order) {
      std::vector<NodeId> shuffled = targets;
      for (std::size_t k = shuffled.size(); k > 1; --k) std::swap(shuffled[k - 1], shuffled[rng.uniform_inclusive(k - 1)]);
      order_mismatch += compatible_minus_one(rsg, shuffled, order) != ref;
      ++order_checks;
    }
  }

  std::size_t instances = 0, nonuniform = 0, invalid = 0, below = 0, inexact = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    const NodeId n = 10 + static_cast<NodeId>(s % 41);
    const Graph g = generate_er({n, 1.0 + static_cast<double>(s % 6), derive_seed(6008, {s})});
    const MbeaResult r = run_mbea(g);
    ++instances;
    const SolutionSet sols = enumerate_assignments(r.rsg, 1u << 14);
    for (const auto& a : sols.assignments) {
      nonuniform += a.cover_size != r.cover_size;
      invalid += !is_vertex_cover(g, a);
    }
    const Assignment one = cover_from_rsg(r);
    invalid += !is_vertex_cover(g, one);
    const std::size_t tau = exact_min_cover(g);
    below += one.cover_size < tau;
    inexact += leaf_removal_ranks(g).core_empty() && one.cover_size != tau;
  }
  const bool pass = violations == 0 && order_mismatch == 0 && nonuniform == 0 && invalid == 0 && below == 0 &&
                    inexact == 0;
  std::ostringstream d;
  d << steps << " steps validated (" << violations << " violations); " << order_checks << " shuffled orders ("
    << order_mismatch << " mismatches); " << instances << " graphs: " << nonuniform << " non-uniform, " << invalid
    << " invalid covers, " << below << " below optimum, " << inexact << " inexact without core";
  return {pass, d.str()};
}

// 7. Byte-identical reports across runs and worker counts.
Outcome determinism() {
  ExperimentConfig cfg;
  cfg.c_grid = {1, 2, 3, 4, 5};
  cfg.n_grid = {300};
  cfg.instances = 16;
  cfg.seed = 7007;
  bool pass = true;
  std::vector<std::function<ExperimentReport(const ExperimentConfig&)>> runs{cmd_backbone_fractions, cmd_coverage};
  for (auto& run : runs) {
    cfg.workers = 1;
    const std::string a = to_csv(run(cfg));
    const std::string b = to_csv(run(cfg));
    cfg.workers = 4;
    const std::string c = to_csv(run(cfg));
    pass &= a == b && a == c;
  }
  ExperimentConfig err = cfg;
  err.n_grid = {40};
  err.workers = 1;
  const std::string e1 = to_csv(cmd_error_vs_exact(err)) + to_json(cmd_error_vs_exact(err));
  err.workers = 3;
  pass &= e1 == to_csv(cmd_error_vs_exact(err)) + to_json(cmd_error_vs_exact(err));
  return {pass, "backbone, coverage and error reports identical for 1, 3 and 4 workers and on rerun"};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only, known;
  app.add_option("--only", only, "comma-separated criteria to run");
  app.add_option("--known-failure", known, "comma-separated criteria allowed to fail");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> run = parse_list(only);
  const std::set<int> allowed = parse_list(known);

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"core-free exactness", core_free_exactness}, {"error vs exact", error_vs_exact},
      {"golden structures", golden_structures},     {"backbone trend", backbone_trend},
      {"runtime scaling", runtime_scaling},         {"property suites", properties},
      {"determinism", determinism},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!run.empty() && !run.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool known_fail = !o.pass && allowed.count(id);
    if (!o.pass && !known_fail) ++unexpected;
    std::printf("criterion %d %s  %s: %s [%.1fs]%s\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first,
                o.detail.c_str(), seconds_since(t0), known_fail ? " (known failure)" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
