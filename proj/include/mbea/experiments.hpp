#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbea/graph.hpp"
#include "mbea/oracle.hpp"

namespace mbea {

struct OracleBudgets {
  NodeId min_cover = kDefaultMinCoverBudget;
  NodeId enumeration = kDefaultEnumerationBudget;
};

/// Ensemble definition. Every (c, n) pair of the two grids is one report row.
struct ExperimentConfig {
  std::vector<double> c_grid;
  std::vector<NodeId> n_grid;
  std::size_t instances = 1;
  std::uint64_t seed = 0;
  OracleBudgets budgets;
  unsigned workers = 1;  ///< 0 picks the hardware concurrency

  /// Throws ParameterError on an empty grid, a negative c, n < 1 or zero instances.
  void check() const;
};

/// Seed of one instance; shared by every n for the same c index.
std::uint64_t instance_seed(std::uint64_t base, std::size_t c_index, std::size_t instance_index);

struct InstanceResult {
  std::size_t cover_size = 0;
  double x = 0.0;
  double pos_frac = 0.0;
  double neg_frac = 0.0;
  double unfrozen_frac = 0.0;
  bool core_empty = false;
  std::optional<double> error;  ///< (mbea - exact) / n when the oracle ran
  bool refused = false;         ///< oracle budget refusal
};

/// Runs MBEA (and the exact oracle when `with_oracle`) on one seeded graph.
InstanceResult run_instance(NodeId n, double c, std::uint64_t seed, bool with_oracle, const OracleBudgets& budgets);

struct ReportRow {
  double c = 0.0;
  NodeId n = 0;
  std::size_t instances = 0;
  double x_mean = 0.0;
  double x_stderr = 0.0;
  double pos_frac = 0.0;
  double neg_frac = 0.0;
  double unfrozen_frac = 0.0;
  double core_empty_frac = 0.0;
  std::optional<double> err_mean;  ///< absent unless the oracle ran
  std::optional<double> err_stderr;
  std::size_t oracle_runs = 0;
  std::size_t refusals = 0;
  bool flagged = false;  ///< refusals above 5% of instances
};

struct ExperimentReport {
  std::string kind;  ///< "backbones", "coverage" or "error"
  ExperimentConfig config;
  std::vector<ReportRow> rows;  ///< c-major, then n, in grid order
};

inline constexpr const char* kCsvHeader =
    "c,n,instances,x_mean,x_stderr,pos_frac,neg_frac,unfrozen_frac,core_empty_frac,err_mean,err_stderr";

ExperimentReport cmd_backbone_fractions(const ExperimentConfig& cfg);
ExperimentReport cmd_coverage(const ExperimentConfig& cfg);
/// Throws ParameterError if the min-cover budget is below some n of the grid.
ExperimentReport cmd_error_vs_exact(const ExperimentConfig& cfg);

/// Header line plus one line per row; err columns are empty when absent.
std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);

}  // namespace mbea
