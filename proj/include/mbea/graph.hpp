#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbea {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for invalid generator parameters or graph construction input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the edge-list parser; carries the 1-based input line.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on nodes 0..n-1.
///
/// Edges are kept in ascending lexicographic order and the edge id is the
/// position in that order. Adjacency is stored in CSR form with neighbor
/// lists sorted ascending; `incident_edges(u)[k]` is the id of the edge to
/// `neighbors(u)[k]`. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Endpoints may be given in
  /// either order; self-loops, duplicates and out-of-range endpoints throw
  /// ParameterError.
  static Graph from_edges(NodeId n, std::span<const Edge> edges);

  NodeId size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const NodeId> neighbors(NodeId u) const {
    const auto s = static_cast<std::size_t>(u);
    return {adj_nodes_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
  }
  std::span<const EdgeId> incident_edges(NodeId u) const {
    const auto s = static_cast<std::size_t>(u);
    return {adj_edges_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
  }
  std::size_t degree(NodeId u) const {
    const auto s = static_cast<std::size_t>(u);
    return offsets_[s + 1] - offsets_[s];
  }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adj_nodes_;
  std::vector<EdgeId> adj_edges_;
};

/// Parameters of the G(N, M) ensemble with M = round(mean_degree * n / 2).
struct GenConfig {
  NodeId n = 0;
  double mean_degree = 0.0;
  std::uint64_t seed = 0;

  std::uint64_t edge_target() const;
};

/// Uniform simple graph with exactly config.edge_target() distinct edges.
/// Deterministic for a fixed seed on every platform (see random.hpp).
Graph generate_er(const GenConfig& config);

/// Edge-list text: "N M" header, then M lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string write_edge_list(const Graph& g);

Graph complete_graph(NodeId n);
Graph cycle_graph(NodeId n);
Graph path_graph(NodeId n);

}  // namespace mbea
