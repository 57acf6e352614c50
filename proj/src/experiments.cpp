#include "mbea/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <memory>
#include <thread>

#include <json.hpp>

#include "mbea/leaf_removal.hpp"
#include "mbea/mbea.hpp"
#include "mbea/random.hpp"

namespace mbea {

void ExperimentConfig::check() const {
  if (c_grid.empty()) throw ParameterError("empty c grid");
  if (n_grid.empty()) throw ParameterError("empty n grid");
  for (double c : c_grid)
    if (!(c >= 0.0)) throw ParameterError("mean degree must be >= 0");
  for (NodeId n : n_grid)
    if (n < 1) throw ParameterError("n must be >= 1");
  if (instances < 1) throw ParameterError("instances must be >= 1");
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t c_index, std::size_t instance_index) {
  return derive_seed(base, {static_cast<std::uint64_t>(c_index), static_cast<std::uint64_t>(instance_index)});
}

InstanceResult run_instance(NodeId n, double c, std::uint64_t seed, bool with_oracle, const OracleBudgets& budgets) {
  auto g = std::make_shared<const Graph>(generate_er({n, c, seed}));
  auto ranks = std::make_shared<const RankAssignment>(leaf_removal_ranks(*g));
  const MbeaResult res = run_mbea(g, ranks);
  const double size = static_cast<double>(n);

  InstanceResult out;
  out.cover_size = res.cover_size;
  out.x = static_cast<double>(res.cover_size) / size;
  out.pos_frac = static_cast<double>(res.rsg.count(NodeState::PositivelyFrozen)) / size;
  out.neg_frac = static_cast<double>(res.rsg.count(NodeState::NegativelyFrozen)) / size;
  out.unfrozen_frac = static_cast<double>(res.rsg.count(NodeState::Unfrozen)) / size;
  out.core_empty = ranks->core_empty();
  if (with_oracle) {
    try {
      const std::size_t exact = exact_min_cover(*g, budgets.min_cover);
      out.error = (static_cast<double>(res.cover_size) - static_cast<double>(exact)) / size;
    } catch (const BudgetExceeded&) {
      out.refused = true;
    }
  }
  return out;
}

namespace {

struct Moments {
  double sum = 0.0;
  double sq = 0.0;
  std::size_t k = 0;

  void add(double v) {
    sum += v;
    sq += v * v;
    ++k;
  }
  double mean() const { return k ? sum / static_cast<double>(k) : 0.0; }
  double stderr_of_mean() const {
    if (k < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sq - static_cast<double>(k) * m * m) / static_cast<double>(k - 1));
    return std::sqrt(var / static_cast<double>(k));
  }
};

ExperimentReport run_ensemble(const ExperimentConfig& cfg, const char* kind, bool with_oracle) {
  cfg.check();
  const std::size_t per_row = cfg.instances;
  const std::size_t rows = cfg.c_grid.size() * cfg.n_grid.size();
  const std::size_t total = rows * per_row;
  std::vector<InstanceResult> results(total);

  auto task = [&](std::size_t t) {
    const std::size_t row = t / per_row;
    const std::size_t inst = t % per_row;
    const std::size_t ci = row / cfg.n_grid.size();
    const NodeId n = cfg.n_grid[row % cfg.n_grid.size()];
    results[t] = run_instance(n, cfg.c_grid[ci], instance_seed(cfg.seed, ci, inst), with_oracle, cfg.budgets);
  };

  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    for (std::size_t t = 0; t < total; ++t) task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t; !failed && (t = next.fetch_add(1)) < total;) {
          try {
            task(t);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentReport report{kind, cfg, {}};
  for (std::size_t row = 0; row < rows; ++row) {
    ReportRow r;
    r.c = cfg.c_grid[row / cfg.n_grid.size()];
    r.n = cfg.n_grid[row % cfg.n_grid.size()];
    r.instances = per_row;
    Moments x, pos, neg, unf, core, err;
    for (std::size_t i = 0; i < per_row; ++i) {
      const InstanceResult& ir = results[row * per_row + i];
      x.add(ir.x);
      pos.add(ir.pos_frac);
      neg.add(ir.neg_frac);
      unf.add(ir.unfrozen_frac);
      core.add(ir.core_empty ? 1.0 : 0.0);
      if (ir.error) err.add(*ir.error);
      if (ir.refused) ++r.refusals;
    }
    r.x_mean = x.mean();
    r.x_stderr = x.stderr_of_mean();
    r.pos_frac = pos.mean();
    r.neg_frac = neg.mean();
    r.unfrozen_frac = unf.mean();
    r.core_empty_frac = core.mean();
    if (with_oracle) {
      r.oracle_runs = err.k;
      if (err.k) {
        r.err_mean = err.mean();
        r.err_stderr = err.stderr_of_mean();
      }
      r.flagged = static_cast<double>(r.refusals) > 0.05 * static_cast<double>(per_row);
    }
    report.rows.push_back(r);
  }
  return report;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

ExperimentReport cmd_backbone_fractions(const ExperimentConfig& cfg) { return run_ensemble(cfg, "backbones", false); }

ExperimentReport cmd_coverage(const ExperimentConfig& cfg) { return run_ensemble(cfg, "coverage", false); }

ExperimentReport cmd_error_vs_exact(const ExperimentConfig& cfg) {
  cfg.check();
  for (NodeId n : cfg.n_grid)
    if (n > cfg.budgets.min_cover)
      throw ParameterError("oracle budget " + std::to_string(cfg.budgets.min_cover) + " is below n = " +
                           std::to_string(n));
  return run_ensemble(cfg, "error", true);
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ReportRow& r : report.rows) {
    out += num(r.c) + ',' + std::to_string(r.n) + ',' + std::to_string(r.instances) + ',' + num(r.x_mean) + ',' +
           num(r.x_stderr) + ',' + num(r.pos_frac) + ',' + num(r.neg_frac) + ',' + num(r.unfrozen_frac) + ',' +
           num(r.core_empty_frac) + ',' + (r.err_mean ? num(*r.err_mean) : "") + ',' +
           (r.err_stderr ? num(*r.err_stderr) : "") + '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport& report) {
  using nlohmann::json;
  json j;
  j["kind"] = report.kind;
  j["config"] = {{"c", report.config.c_grid},
                 {"n", report.config.n_grid},
                 {"instances", report.config.instances},
                 {"seed", report.config.seed},
                 {"oracle_budget", report.config.budgets.min_cover}};
  j["rows"] = json::array();
  for (const ReportRow& r : report.rows) {
    json row = {{"c", r.c},
                {"n", r.n},
                {"instances", r.instances},
                {"x_mean", r.x_mean},
                {"x_stderr", r.x_stderr},
                {"pos_frac", r.pos_frac},
                {"neg_frac", r.neg_frac},
                {"unfrozen_frac", r.unfrozen_frac},
                {"core_empty_frac", r.core_empty_frac},
                {"err_mean", r.err_mean ? json(*r.err_mean) : json(nullptr)},
                {"err_stderr", r.err_stderr ? json(*r.err_stderr) : json(nullptr)}};
    if (report.kind == "error") {
      row["oracle_runs"] = r.oracle_runs;
      row["refusals"] = r.refusals;
      row["flagged"] = r.flagged;
    }
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace mbea
