#pragma once

#include <vector>

#include "mbea/graph.hpp"

namespace mbea {

/// Per-node leaf-removal rank.
///
/// Round t of leaf removal gives every pendant point rank 2t-1 and every
/// petiole rank 2t. Nodes surviving all rounds form the leaf-removal core and
/// get distinct ranks above every non-core rank (see leaf_removal_ranks).
struct RankAssignment {
  std::vector<int> rank;
  std::vector<char> in_core;
  int max_rank = 0;

  bool core_empty() const;
  std::size_t core_size() const;
};

/// Runs leaf removal to exhaustion and ranks every node.
///
/// All leaves present at the start of a round are removed together. An
/// isolated node is a pendant without petiole; on an isolated edge the lower
/// id is the pendant. Core nodes are ranked breadth-first from the core nodes
/// adjacent to already ranked nodes, ascending id within a layer, one new rank
/// per node. A core component with no ranked neighbor (for instance the
/// whole graph when nothing is removable) is ranked by ascending id.
RankAssignment leaf_removal_ranks(const Graph& g);

struct CoreSubgraph {
  Graph graph;
  std::vector<NodeId> to_original;  ///< core-local id -> id in the input graph
};

/// Induced subgraph on the core nodes.
CoreSubgraph core_subgraph(const Graph& g, const RankAssignment& ranks);

/// Node ids sorted by (rank, id): the order in which MBEA adds nodes.
std::vector<NodeId> rank_order(const RankAssignment& ranks);

}  // namespace mbea
