#include "mbea/solution.hpp"

#include <algorithm>

namespace mbea {

Assignment Assignment::from_spins(std::vector<Spin> spins) {
  Assignment a;
  a.cover_size = static_cast<std::size_t>(std::count(spins.begin(), spins.end(), kCovered));
  a.spin = std::move(spins);
  return a;
}

Assignment Assignment::from_cover(NodeId n, const std::vector<NodeId>& cover) {
  std::vector<Spin> spins(static_cast<std::size_t>(n), kUncovered);
  for (NodeId u : cover) spins[static_cast<std::size_t>(u)] = kCovered;
  return from_spins(std::move(spins));
}

std::vector<NodeId> Assignment::cover() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < spin.size(); ++i)
    if (spin[i] == kCovered) out.push_back(static_cast<NodeId>(i));
  return out;
}

bool is_vertex_cover(const Graph& g, const Assignment& a) {
  if (a.spin.size() != static_cast<std::size_t>(g.size())) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return a.spin[static_cast<std::size_t>(e.u)] == kCovered || a.spin[static_cast<std::size_t>(e.v)] == kCovered;
  });
}

void SolutionSet::canonicalize() {
  std::sort(assignments.begin(), assignments.end());
  assignments.erase(std::unique(assignments.begin(), assignments.end()), assignments.end());
}

}  // namespace mbea
