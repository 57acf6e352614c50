#include "mbea/leaf_removal.hpp"

#include <algorithm>
#include <numeric>

namespace mbea {

bool RankAssignment::core_empty() const {
  return std::none_of(in_core.begin(), in_core.end(), [](char c) { return c != 0; });
}

std::size_t RankAssignment::core_size() const {
  return static_cast<std::size_t>(std::count_if(in_core.begin(), in_core.end(), [](char c) { return c != 0; }));
}

RankAssignment leaf_removal_ranks(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  RankAssignment out;
  out.rank.assign(n, 0);
  out.in_core.assign(n, 1);

  std::vector<std::size_t> deg(n);
  for (NodeId u = 0; u < g.size(); ++u) deg[static_cast<std::size_t>(u)] = g.degree(u);
  std::vector<char> removed(n, 0);

  auto remaining_neighbor = [&](NodeId u) -> NodeId {
    for (NodeId w : g.neighbors(u))
      if (!removed[static_cast<std::size_t>(w)]) return w;
    return -1;
  };

  // Candidates for the next round: nodes whose remaining degree may be <= 1.
  std::vector<NodeId> frontier(n);
  std::iota(frontier.begin(), frontier.end(), NodeId{0});
  std::vector<char> queued(n, 0);
  int round = 0;
  while (!frontier.empty()) {
    std::vector<NodeId> pendants;
    std::vector<NodeId> petioles;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (NodeId u : frontier) {
      auto su = static_cast<std::size_t>(u);
      queued[su] = 0;
      if (removed[su] || deg[su] > 1) continue;
      if (deg[su] == 0) {
        pendants.push_back(u);
        continue;
      }
      NodeId w = remaining_neighbor(u);
      auto sw = static_cast<std::size_t>(w);
      if (deg[sw] == 1 && w < u) continue;  // isolated edge: the lower id is the pendant
      pendants.push_back(u);
      petioles.push_back(w);
    }
    frontier.clear();
    if (pendants.empty()) break;
    ++round;
    std::sort(petioles.begin(), petioles.end());
    petioles.erase(std::unique(petioles.begin(), petioles.end()), petioles.end());

    for (NodeId u : pendants) out.rank[static_cast<std::size_t>(u)] = 2 * round - 1;
    for (NodeId w : petioles) out.rank[static_cast<std::size_t>(w)] = 2 * round;
    auto remove = [&](NodeId u) {
      auto su = static_cast<std::size_t>(u);
      removed[su] = 1;
      out.in_core[su] = 0;
    };
    for (NodeId u : pendants) remove(u);
    for (NodeId w : petioles) remove(w);
    auto touch = [&](NodeId u) {
      for (NodeId x : g.neighbors(u)) {
        auto sx = static_cast<std::size_t>(x);
        if (removed[sx]) continue;
        --deg[sx];
        if (deg[sx] <= 1 && !queued[sx]) {
          queued[sx] = 1;
          frontier.push_back(x);
        }
      }
    };
    for (NodeId u : pendants) touch(u);
    for (NodeId w : petioles) touch(w);
  }

  int next = 0;
  for (NodeId u = 0; u < g.size(); ++u)
    if (!out.in_core[static_cast<std::size_t>(u)]) next = std::max(next, out.rank[static_cast<std::size_t>(u)]);

  // Core ranking: breadth-first layers outward from ranked neighbors.
  std::vector<NodeId> layer;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (!out.in_core[static_cast<std::size_t>(u)]) continue;
    for (NodeId w : g.neighbors(u))
      if (!out.in_core[static_cast<std::size_t>(w)]) {
        layer.push_back(u);
        break;
      }
  }
  std::vector<char> seen(n, 0);
  for (NodeId u : layer) seen[static_cast<std::size_t>(u)] = 1;
  NodeId seed_scan = 0;
  while (true) {
    if (layer.empty()) {
      while (seed_scan < g.size() &&
             (!out.in_core[static_cast<std::size_t>(seed_scan)] || seen[static_cast<std::size_t>(seed_scan)]))
        ++seed_scan;
      if (seed_scan == g.size()) break;
      // A core component out of reach of every ranked node: ascending id.
      std::vector<NodeId> comp{seed_scan};
      seen[static_cast<std::size_t>(seed_scan)] = 1;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (NodeId w : g.neighbors(comp[k])) {
          auto sw = static_cast<std::size_t>(w);
          if (out.in_core[sw] && !seen[sw]) {
            seen[sw] = 1;
            comp.push_back(w);
          }
        }
      std::sort(comp.begin(), comp.end());
      for (NodeId u : comp) out.rank[static_cast<std::size_t>(u)] = ++next;
      continue;
    }
    std::sort(layer.begin(), layer.end());
    std::vector<NodeId> next_layer;
    for (NodeId u : layer) {
      out.rank[static_cast<std::size_t>(u)] = ++next;
      for (NodeId w : g.neighbors(u)) {
        auto sw = static_cast<std::size_t>(w);
        if (out.in_core[sw] && !seen[sw]) {
          seen[sw] = 1;
          next_layer.push_back(w);
        }
      }
    }
    layer = std::move(next_layer);
  }
  out.max_rank = next;
  return out;
}

CoreSubgraph core_subgraph(const Graph& g, const RankAssignment& ranks) {
  CoreSubgraph out;
  std::vector<NodeId> local(static_cast<std::size_t>(g.size()), -1);
  for (NodeId u = 0; u < g.size(); ++u) {
    if (ranks.in_core[static_cast<std::size_t>(u)]) {
      local[static_cast<std::size_t>(u)] = static_cast<NodeId>(out.to_original.size());
      out.to_original.push_back(u);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    NodeId a = local[static_cast<std::size_t>(e.u)];
    NodeId b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph::from_edges(static_cast<NodeId>(out.to_original.size()), edges);
  return out;
}

std::vector<NodeId> rank_order(const RankAssignment& ranks) {
  std::vector<NodeId> order(ranks.rank.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return ranks.rank[static_cast<std::size_t>(a)] < ranks.rank[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace mbea
