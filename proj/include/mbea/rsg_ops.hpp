#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbea/rsg.hpp"
#include "mbea/solution.hpp"

namespace mbea {

/// Raised when an operation's precondition on the RSG does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unit propagation over the unfrozen part of an RSG.
///
/// Rules: x = +1 forces every active neighbor to -1; x = -1 forces every
/// constraining Double partner to +1. Frozen nodes act as fixed values: a
/// forced value that disagrees with one is a contradiction, an agreeing one
/// stops there. The RSG is never modified.
///
/// Assignments accumulate across calls until `clear()`, which makes the
/// object usable as the trail of a backtracking search.
class Propagator {
 public:
  explicit Propagator(const ReducedSolutionGraph& rsg);

  /// Assigns `value` to the unfrozen node `u` and closes under the rules.
  /// Returns false on contradiction; the partial closure stays recorded.
  bool assign(NodeId u, Spin value);

  /// Same, but pops the worklist in an order drawn from `order_seed`.
  bool assign_shuffled(NodeId u, Spin value, std::uint64_t order_seed);

  Spin value(NodeId u) const { return value_[static_cast<std::size_t>(u)]; }
  std::size_t trail_size() const { return trail_.size(); }
  std::span<const NodeId> trail() const { return trail_; }
  /// Undoes assignments back to trail position `mark`.
  void undo_to(std::size_t mark);
  void clear() { undo_to(0); }

 private:
  bool run(std::optional<std::uint64_t> order_seed);
  bool force(NodeId u, Spin value);

  const ReducedSolutionGraph* rsg_;
  std::vector<Spin> value_;
  std::vector<NodeId> trail_;
  std::vector<NodeId> work_;
};

/// True iff all targets can take -1 together under unit propagation.
/// Throws ContractViolation if a target is inactive or frozen.
bool compatible_minus_one(const ReducedSolutionGraph& rsg, std::span<const NodeId> targets);
bool compatible_minus_one(const ReducedSolutionGraph& rsg, std::span<const NodeId> targets,
                          std::uint64_t order_seed);

/// Freezing influence from the frozen node `i`: a positively frozen node
/// forces its unfrozen neighbors negative, a negatively frozen node forces
/// its unfrozen Double partners positive, recursively, copying i's mark.
/// Returns the nodes frozen by the cascade.
std::vector<NodeId> freezing(ReducedSolutionGraph& rsg, NodeId i);

/// Releasing operation with the checking technique. Unfreezes `i`, then every
/// node reachable through neighbors marked `root`, except negatively frozen
/// nodes that still see a positively frozen neighbor with another mark.
/// Returns the unfrozen nodes (i first).
std::vector<NodeId> releasing(ReducedSolutionGraph& rsg, NodeId i, std::optional<NodeId> root);

/// Rechecking technique: while some marked negatively frozen node has exactly
/// one positively frozen neighbor, pair the two with a Double edge and release
/// the node's cascade. Returns every node whose state changed.
std::vector<NodeId> rechecking(ReducedSolutionGraph& rsg);

/// Odd-cycle breaking on the unfrozen components that meet `touched`: a node
/// whose +1 propagation fails becomes negatively frozen (its own mark) and
/// its freezing influence is applied. Returns the nodes frozen.
std::vector<NodeId> break_odd_cycles(ReducedSolutionGraph& rsg, std::span<const NodeId> touched);

/// Same outcome as break_odd_cycles when no unfrozen node was forced before
/// the nodes in `fresh` changed state: only nodes whose +1 implications can
/// reach a fresh node (or a fresh positive node's neighbor) are tested.
std::vector<NodeId> break_new_odd_cycles(ReducedSolutionGraph& rsg, std::span<const NodeId> fresh);

/// Groups the unfrozen nodes into blocks joined by constraining Double edges
/// and, for each block whose two sides differ in size (rank order), freezes
/// the block with its larger side at +1, or the smaller side when that is the
/// only consistent orientation, then breaks odd cycles again. Afterwards
/// every represented assignment has the same cover size. Returns the nodes
/// frozen.
std::vector<NodeId> balance_blocks(ReducedSolutionGraph& rsg);

/// Connected components of the active unfrozen nodes (through any active
/// edge), each sorted by (rank, id); components ordered by first node.
std::vector<std::vector<NodeId>> unfrozen_components(const ReducedSolutionGraph& rsg);

/// Every represented assignment, up to `limit` (0 = unlimited). When the limit
/// cuts the enumeration short, `complete` is false.
SolutionSet enumerate_assignments(const ReducedSolutionGraph& rsg, std::size_t limit = 0);

/// Lexicographically first represented assignment by ascending node id,
/// preferring +1; nullopt if none exists.
std::optional<Assignment> first_assignment(const ReducedSolutionGraph& rsg);

}  // namespace mbea
