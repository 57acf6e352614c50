#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "mbea/graph.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/rsg.hpp"
#include "mbea/solution.hpp"

namespace mbea {

enum class CaseLabel : std::uint8_t { A, B, C, D, E };

char to_char(CaseLabel c);

struct TraceEntry {
  NodeId node = 0;
  CaseLabel label = CaseLabel::C;
  std::vector<NodeId> affected;  ///< nodes whose state changed, in order
};

struct MbeaResult {
  ReducedSolutionGraph rsg;
  std::size_t cover_size = 0;
  std::array<std::size_t, 5> case_counts{};  ///< indexed by CaseLabel
  std::vector<TraceEntry> trace;             ///< empty unless requested

  std::size_t count(CaseLabel c) const { return case_counts[static_cast<std::size_t>(c)]; }
};

/// Called after each node addition with the updated graph and that step's entry.
using StepObserver = std::function<void(const ReducedSolutionGraph&, const TraceEntry&)>;

struct MbeaOptions {
  bool trace = false;
  /// Rescan whole touched components for odd cycles instead of only the
  /// nodes whose implications reach this step's changes. Same result, slower.
  bool full_odd_cycle_scan = false;
  StepObserver observer;
};

/// Builds the reduced solution graph by adding nodes in (rank, id) order and
/// updating node states through Cases A-E, then balances the unfrozen blocks
/// (see balance_blocks). `ranks` must come from leaf_removal_ranks(*graph); a
/// mismatch throws ContractViolation.
MbeaResult run_mbea(std::shared_ptr<const Graph> graph, std::shared_ptr<const RankAssignment> ranks,
                    const MbeaOptions& options = {});
MbeaResult run_mbea(const Graph& graph, const RankAssignment& ranks, bool trace = false);
/// Computes the ranks itself.
MbeaResult run_mbea(const Graph& graph, bool trace = false);

/// One represented cover: frozen spins as frozen, each unfrozen component
/// set to its lexicographically first valid assignment (+1 preferred).
/// Throws std::logic_error if some component admits no assignment.
Assignment cover_from_rsg(const MbeaResult& result);

}  // namespace mbea
