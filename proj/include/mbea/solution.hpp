#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbea/graph.hpp"

namespace mbea {

/// Spin convention: -1 covered (in the cover), +1 uncovered, 0 for nodes the
/// assignment does not speak about (inactive).
using Spin = std::int8_t;
inline constexpr Spin kCovered = -1;
inline constexpr Spin kUncovered = 1;
inline constexpr Spin kUnassigned = 0;

struct Assignment {
  std::vector<Spin> spin;
  std::size_t cover_size = 0;

  static Assignment from_spins(std::vector<Spin> spins);
  static Assignment from_cover(NodeId n, const std::vector<NodeId>& cover);
  std::vector<NodeId> cover() const;

  friend bool operator==(const Assignment& a, const Assignment& b) { return a.spin == b.spin; }
  friend bool operator<(const Assignment& a, const Assignment& b) { return a.spin < b.spin; }
};

/// True when every edge of g has a covered endpoint.
bool is_vertex_cover(const Graph& g, const Assignment& a);

struct SolutionSet {
  std::vector<Assignment> assignments;
  std::size_t min_cover_size = 0;
  bool complete = true;

  /// Sorts assignments canonically and removes duplicates.
  void canonicalize();
};

}  // namespace mbea
