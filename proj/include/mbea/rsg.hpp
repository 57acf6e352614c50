#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbea/graph.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/solution.hpp"

namespace mbea {

enum class NodeState : std::uint8_t { Unfrozen, PositivelyFrozen, NegativelyFrozen };
enum class EdgeKind : std::uint8_t { Plain, Double };

const char* to_string(NodeState s);
const char* to_string(EdgeKind k);

/// Reduced solution graph over a fixed host graph.
///
/// Nodes become active one at a time; the active nodes induce the current
/// subgraph. Every active node is unfrozen, positively frozen (always +1,
/// uncovered) or negatively frozen (always -1, covered). A frozen node carries
/// the id of the cascade root that froze it; unfrozen nodes carry no mark.
///
/// A Double edge records a mutual determination: its endpoints take opposite
/// spins. It constrains assignments only while both endpoints are unfrozen
/// (`constrains_pair`). When a cascade freezes both endpoints (necessarily
/// with opposite signs) the kind is kept so that releasing the cascade
/// restores the pairing; a Double left with a single frozen endpoint after a
/// release is demoted to Plain.
///
/// The represented assignments are those where frozen nodes keep their spin,
/// every active edge is covered, and every constraining Double edge has
/// opposite endpoint spins.
class ReducedSolutionGraph {
 public:
  ReducedSolutionGraph() = default;
  ReducedSolutionGraph(std::shared_ptr<const Graph> graph, std::shared_ptr<const RankAssignment> ranks);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const RankAssignment& ranks() const { return *ranks_; }
  const std::shared_ptr<const RankAssignment>& ranks_ptr() const { return ranks_; }
  NodeId size() const { return graph_ ? graph_->size() : 0; }
  int rank(NodeId u) const { return ranks_->rank[idx(u)]; }
  /// All node ids sorted by (rank, id).
  const std::vector<NodeId>& order() const { return *order_; }
  /// Index of u in order().
  std::size_t position(NodeId u) const { return (*position_)[idx(u)]; }

  bool active(NodeId u) const { return (code_[idx(u)] & kActiveBit) != 0; }
  void activate(NodeId u) { code_[idx(u)] |= kActiveBit; }

  NodeState state(NodeId u) const { return static_cast<NodeState>(code_[idx(u)] >> 1); }
  void set_state(NodeId u, NodeState s) {
    code_[idx(u)] = static_cast<std::uint8_t>((code_[idx(u)] & kActiveBit) | (static_cast<std::uint8_t>(s) << 1));
  }
  bool unfrozen(NodeId u) const { return code_[idx(u)] == code_of(NodeState::Unfrozen); }
  bool positive(NodeId u) const { return code_[idx(u)] == code_of(NodeState::PositivelyFrozen); }
  bool negative(NodeId u) const { return code_[idx(u)] == code_of(NodeState::NegativelyFrozen); }

  std::optional<NodeId> mark(NodeId u) const;
  NodeId raw_mark(NodeId u) const { return mark_[idx(u)]; }  ///< kNoMark when unmarked
  void set_mark(NodeId u, std::optional<NodeId> m) { mark_[idx(u)] = m.value_or(kNoMark); }

  void freeze(NodeId u, NodeState s, NodeId root) {
    set_state(u, s);
    mark_[idx(u)] = root;
    if (journaling_) journal_.push_back(u);
  }
  void unfreeze(NodeId u) {
    set_state(u, NodeState::Unfrozen);
    mark_[idx(u)] = kNoMark;
    if (journaling_) journal_.push_back(u);
  }

  /// While on, every freeze and unfreeze appends the node to journal().
  void set_journaling(bool on) { journaling_ = on; }
  bool journaling() const { return journaling_; }
  const std::vector<NodeId>& journal() const { return journal_; }
  void clear_journal() { journal_.clear(); }
  void journal_push(NodeId u) { journal_.push_back(u); }
  void truncate_journal(std::size_t n) { journal_.resize(std::min(n, journal_.size())); }

  EdgeKind edge_kind(EdgeId e) const { return kind_[static_cast<std::size_t>(e)]; }
  void set_edge_kind(EdgeId e, EdgeKind k) { kind_[static_cast<std::size_t>(e)] = k; }
  /// Sets the kind of the host edge (u, v); throws std::out_of_range if absent.
  void set_edge_kind(NodeId u, NodeId v, EdgeKind k);

  bool edge_active(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    return active(ed.u) && active(ed.v);
  }
  /// Double edge whose endpoints are both unfrozen.
  bool constrains_pair(EdgeId e) const {
    if (edge_kind(e) != EdgeKind::Double) return false;
    const Edge& ed = graph_->edge(e);
    return unfrozen(ed.u) && unfrozen(ed.v);
  }

  /// Spin a frozen node is pinned to, or kUnassigned.
  Spin frozen_spin(NodeId u) const;

  std::size_t count(NodeState s) const;
  std::size_t active_count() const;

  static constexpr NodeId kNoMark = -1;

 private:
  static std::size_t idx(NodeId u) { return static_cast<std::size_t>(u); }
  static constexpr std::uint8_t kActiveBit = 1;
  static constexpr std::uint8_t code_of(NodeState s) {
    return static_cast<std::uint8_t>(kActiveBit | (static_cast<std::uint8_t>(s) << 1));
  }

  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const RankAssignment> ranks_;
  std::shared_ptr<const std::vector<NodeId>> order_;
  std::shared_ptr<const std::vector<std::size_t>> position_;
  std::vector<std::uint8_t> code_;  ///< active bit | state << 1
  std::vector<NodeId> mark_;
  std::vector<EdgeKind> kind_;
  bool journaling_ = false;
  std::vector<NodeId> journal_;
};

/// Checks the structural invariants; returns one message per violation.
///
///  * inactive nodes are unfrozen and unmarked, their edges Plain;
///  * unfrozen nodes are unmarked, frozen nodes are marked;
///  * no active edge joins two positively frozen nodes;
///  * a Double edge joins two active nodes that are both unfrozen or frozen
///    with opposite signs.
std::vector<std::string> validate(const ReducedSolutionGraph& rsg);

std::string export_json(const ReducedSolutionGraph& rsg);
std::string export_dot(const ReducedSolutionGraph& rsg);

/// Rebuilds a reduced solution graph from export_json output.
ReducedSolutionGraph import_json(const std::string& text);

}  // namespace mbea
