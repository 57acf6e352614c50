#include "mbea/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "mbea/random.hpp"

namespace mbea {

GraphFormatError::GraphFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges) {
  if (n < 0) throw ParameterError("negative node count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ParameterError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (e.u == e.v) throw ParameterError("self-loop at node " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw ParameterError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < deg.size(); ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_nodes_.resize(g.offsets_.back());
  g.adj_edges_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so for every u the neighbors arrive in ascending order:
  // first the smaller endpoints (as v of earlier edges), then the larger ones.
  for (std::size_t id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    auto su = static_cast<std::size_t>(e.u);
    auto sv = static_cast<std::size_t>(e.v);
    g.adj_nodes_[fill[su]] = e.v;
    g.adj_edges_[fill[su]++] = static_cast<EdgeId>(id);
    g.adj_nodes_[fill[sv]] = e.u;
    g.adj_edges_[fill[sv]++] = static_cast<EdgeId>(id);
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::uint64_t GenConfig::edge_target() const {
  if (n < 0) throw ParameterError("negative node count");
  if (!(mean_degree >= 0.0) || !std::isfinite(mean_degree)) throw ParameterError("mean degree must be finite and >= 0");
  const double m = std::round(mean_degree * static_cast<double>(n) / 2.0);
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  if (m > static_cast<double>(max_edges))
    throw ParameterError("requested " + std::to_string(static_cast<long long>(m)) + " edges but n=" +
                         std::to_string(n) + " allows at most " + std::to_string(max_edges));
  return static_cast<std::uint64_t>(m);
}

namespace {

// Position k in the row-major enumeration of pairs (u, v), u < v.
Edge pair_from_index(std::uint64_t k, std::uint64_t n) {
  // Row u starts at u*(2n-u-1)/2.
  auto row_start = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
  const double nd = static_cast<double>(n);
  auto u = static_cast<std::uint64_t>(
      std::floor((2 * nd - 1 - std::sqrt((2 * nd - 1) * (2 * nd - 1) - 8 * static_cast<double>(k))) / 2));
  if (u >= n) u = n - 1;
  while (u > 0 && row_start(u) > k) --u;
  while (u + 1 < n && row_start(u + 1) <= k) ++u;
  const std::uint64_t v = u + 1 + (k - row_start(u));
  return {static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

}  // namespace

Graph generate_er(const GenConfig& config) {
  const std::uint64_t m = config.edge_target();
  const auto n = static_cast<std::uint64_t>(config.n);
  const std::uint64_t total = n * (n > 0 ? n - 1 : 0) / 2;
  Rng rng(config.seed);

  // Floyd's sampling of m distinct indices from [0, total).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uint64_t t = rng.uniform_inclusive(j);
    if (!chosen.insert(t).second) {
      chosen.insert(j);
      t = j;
    }
    edges.push_back(pair_from_index(t, n));
  }
  return Graph::from_edges(config.n, edges);
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!split_ws(line).empty()) return true;
    }
    return false;
  };

  if (!next_content_line()) throw GraphFormatError(lineno + 1, "missing \"N M\" header");
  auto head = split_ws(line);
  long long n = 0;
  long long m = 0;
  if (head.size() != 2 || !parse_int(head[0], n) || !parse_int(head[1], m) || n < 0 || m < 0 ||
      n > std::numeric_limits<NodeId>::max())
    throw GraphFormatError(lineno, "malformed header, expected \"N M\"");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line())
      throw GraphFormatError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    auto tok = split_ws(line);
    long long u = 0;
    long long v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw GraphFormatError(lineno, "malformed edge line, expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphFormatError(lineno, "endpoint out of range");
    if (u == v) throw GraphFormatError(lineno, "self-loop");
    if (u > v) std::swap(u, v);
    const auto key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
    if (!seen.insert(key).second) throw GraphFormatError(lineno, "duplicate edge");
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (next_content_line()) throw GraphFormatError(lineno, "trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<NodeId>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph complete_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(NodeId n) {
  std::vector<Edge> edges;
  if (n >= 3)
    for (NodeId u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  else if (n == 2)
    edges.push_back({0, 1});
  return Graph::from_edges(n, edges);
}

Graph path_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges);
}

}  // namespace mbea
