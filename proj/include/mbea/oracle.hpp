#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mbea/graph.hpp"
#include "mbea/solution.hpp"

namespace mbea {

/// Exact routes refuse graphs above their node budget instead of running for
/// an unbounded time.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr NodeId kDefaultMinCoverBudget = 150;
inline constexpr NodeId kDefaultEnumerationBudget = 30;

/// Minimum vertex cover size by branch and bound (degree-0/1/2 reductions,
/// maximal-matching lower bound, greedy initial upper bound).
std::size_t exact_min_cover(const Graph& g, NodeId budget = kDefaultMinCoverBudget);

/// Every minimum vertex cover, sorted canonically.
SolutionSet enumerate_min_covers(const Graph& g, NodeId budget = kDefaultEnumerationBudget);

struct SpaceSummary {
  std::vector<NodeId> pos_frozen;
  std::vector<NodeId> neg_frozen;
  std::vector<std::pair<NodeId, NodeId>> mutual_pairs;  ///< u < v, sorted
  std::size_t solution_count = 0;

  friend bool operator==(const SpaceSummary&, const SpaceSummary&) = default;
};

/// Backbones and mutual determinations of a complete solution set. Throws
/// std::invalid_argument for an incomplete set.
SpaceSummary summarize_space(const SolutionSet& s);

struct SpaceDiff {
  bool equal = false;          ///< identical assignment sets
  bool subset = false;         ///< every candidate assignment is in the reference
  long long size_delta = 0;    ///< candidate min cover size minus reference
  std::vector<Assignment> missing;  ///< in reference only
  std::vector<Assignment> extra;    ///< in candidate only
  SpaceSummary candidate_summary;
  SpaceSummary reference_summary;
  bool summaries_equal = false;
};

/// Compares an MBEA solution set against the oracle's. Both must be complete.
SpaceDiff diff_spaces(const SolutionSet& candidate, const SolutionSet& reference);

}  // namespace mbea
