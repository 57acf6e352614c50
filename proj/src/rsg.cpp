#include "mbea/rsg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mbea {

const char* to_string(NodeState s) {
  switch (s) {
    case NodeState::Unfrozen:
      return "unfrozen";
    case NodeState::PositivelyFrozen:
      return "pos";
    case NodeState::NegativelyFrozen:
      return "neg";
  }
  return "?";
}

const char* to_string(EdgeKind k) { return k == EdgeKind::Double ? "double" : "plain"; }

ReducedSolutionGraph::ReducedSolutionGraph(std::shared_ptr<const Graph> graph,
                                           std::shared_ptr<const RankAssignment> ranks)
    : graph_(std::move(graph)), ranks_(std::move(ranks)) {
  if (!graph_ || !ranks_) throw std::invalid_argument("reduced solution graph needs a graph and ranks");
  const auto n = static_cast<std::size_t>(graph_->size());
  if (ranks_->rank.size() != n || ranks_->in_core.size() != n)
    throw std::invalid_argument("rank assignment does not match graph size");
  auto order = rank_order(*ranks_);
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = k;
  order_ = std::make_shared<const std::vector<NodeId>>(std::move(order));
  position_ = std::make_shared<const std::vector<std::size_t>>(std::move(position));
  code_.assign(n, 0);
  mark_.assign(n, kNoMark);
  kind_.assign(graph_->edge_count(), EdgeKind::Plain);
}

std::optional<NodeId> ReducedSolutionGraph::mark(NodeId u) const {
  NodeId m = mark_[idx(u)];
  if (m == kNoMark) return std::nullopt;
  return m;
}

void ReducedSolutionGraph::set_edge_kind(NodeId u, NodeId v, EdgeKind k) {
  auto e = graph_->find_edge(u, v);
  if (!e) throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
  set_edge_kind(*e, k);
}

Spin ReducedSolutionGraph::frozen_spin(NodeId u) const {
  switch (state(u)) {
    case NodeState::PositivelyFrozen:
      return kUncovered;
    case NodeState::NegativelyFrozen:
      return kCovered;
    case NodeState::Unfrozen:
      break;
  }
  return kUnassigned;
}

std::size_t ReducedSolutionGraph::count(NodeState s) const {
  std::size_t c = 0;
  for (std::uint8_t code : code_)
    if (code == code_of(s)) ++c;
  return c;
}

std::size_t ReducedSolutionGraph::active_count() const {
  return static_cast<std::size_t>(
      std::count_if(code_.begin(), code_.end(), [](std::uint8_t code) { return (code & kActiveBit) != 0; }));
}

std::vector<std::string> validate(const ReducedSolutionGraph& rsg) {
  std::vector<std::string> errors;
  const Graph& g = rsg.graph();
  for (NodeId u = 0; u < g.size(); ++u) {
    const std::string tag = "node " + std::to_string(u) + ": ";
    if (!rsg.active(u)) {
      if (rsg.state(u) != NodeState::Unfrozen) errors.push_back(tag + "inactive but frozen");
      if (rsg.mark(u)) errors.push_back(tag + "inactive but marked");
      continue;
    }
    if (rsg.state(u) == NodeState::Unfrozen && rsg.mark(u)) errors.push_back(tag + "unfrozen but marked");
    if (rsg.state(u) != NodeState::Unfrozen && !rsg.mark(u)) errors.push_back(tag + "frozen without mark");
    if (auto m = rsg.mark(u); m && (*m < 0 || *m >= g.size())) errors.push_back(tag + "mark out of range");
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    const std::string tag = "edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) + ": ";
    const bool act = rsg.edge_active(e);
    if (act && rsg.positive(ed.u) && rsg.positive(ed.v)) errors.push_back(tag + "both endpoints positively frozen");
    if (rsg.edge_kind(e) == EdgeKind::Double) {
      if (!act) errors.push_back(tag + "double edge on inactive node");
      else if (rsg.unfrozen(ed.u) != rsg.unfrozen(ed.v))
        errors.push_back(tag + "double edge with exactly one frozen endpoint");
      else if (!rsg.unfrozen(ed.u) && rsg.state(ed.u) == rsg.state(ed.v))
        errors.push_back(tag + "double edge between equally frozen nodes");
    }
  }
  return errors;
}

namespace {

const char* dot_fill(NodeState s) {
  switch (s) {
    case NodeState::PositivelyFrozen:
      return "red";
    case NodeState::NegativelyFrozen:
      return "black";
    case NodeState::Unfrozen:
      break;
  }
  return "white";
}

NodeState parse_state(const std::string& s) {
  if (s == "unfrozen") return NodeState::Unfrozen;
  if (s == "pos") return NodeState::PositivelyFrozen;
  if (s == "neg") return NodeState::NegativelyFrozen;
  throw std::invalid_argument("unknown node state \"" + s + "\"");
}

}  // namespace

std::string export_json(const ReducedSolutionGraph& rsg) {
  nlohmann::ordered_json doc;
  doc["n"] = rsg.size();
  auto nodes = nlohmann::ordered_json::array();
  for (NodeId u = 0; u < rsg.size(); ++u) {
    nlohmann::ordered_json node;
    node["id"] = u;
    node["active"] = rsg.active(u);
    node["state"] = to_string(rsg.state(u));
    if (auto m = rsg.mark(u))
      node["mark"] = *m;
    else
      node["mark"] = nullptr;
    node["rank"] = rsg.rank(u);
    nodes.push_back(std::move(node));
  }
  auto edges = nlohmann::ordered_json::array();
  const Graph& g = rsg.graph();
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    nlohmann::ordered_json edge;
    edge["u"] = g.edge(e).u;
    edge["v"] = g.edge(e).v;
    edge["kind"] = to_string(rsg.edge_kind(e));
    edges.push_back(std::move(edge));
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string export_dot(const ReducedSolutionGraph& rsg) {
  std::ostringstream out;
  out << "graph rsg {\n";
  out << "  node [shape=circle, style=filled, fontcolor=black];\n";
  for (NodeId u = 0; u < rsg.size(); ++u) {
    if (!rsg.active(u)) continue;
    out << "  " << u << " [label=\"" << u << "\\nr" << rsg.rank(u) << "\", fillcolor=" << dot_fill(rsg.state(u));
    if (rsg.state(u) == NodeState::NegativelyFrozen) out << ", fontcolor=white";
    out << "];\n";
  }
  const Graph& g = rsg.graph();
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    if (!rsg.edge_active(e)) continue;
    const Edge& ed = g.edge(e);
    const bool frozen_end = !rsg.unfrozen(ed.u) || !rsg.unfrozen(ed.v);
    out << "  " << ed.u << " -- " << ed.v;
    if (frozen_end)
      out << " [style=dashed]";
    else if (rsg.edge_kind(e) == EdgeKind::Double)
      out << " [color=\"black:invis:black\", penwidth=1.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

ReducedSolutionGraph import_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const NodeId n = doc.at("n").get<NodeId>();
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) edges.push_back({e.at("u").get<NodeId>(), e.at("v").get<NodeId>()});
  auto graph = std::make_shared<const Graph>(Graph::from_edges(n, edges));

  auto ranks = std::make_shared<RankAssignment>();
  ranks->rank.assign(static_cast<std::size_t>(n), 0);
  ranks->in_core.assign(static_cast<std::size_t>(n), 0);
  const auto& nodes = doc.at("nodes");
  if (nodes.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("node array size differs from n");
  for (const auto& node : nodes) {
    const NodeId id = node.at("id").get<NodeId>();
    if (id < 0 || id >= n) throw std::invalid_argument("node id out of range");
    ranks->rank[static_cast<std::size_t>(id)] = node.at("rank").get<int>();
    ranks->max_rank = std::max(ranks->max_rank, node.at("rank").get<int>());
  }

  ReducedSolutionGraph rsg(graph, ranks);
  for (const auto& node : nodes) {
    const NodeId id = node.at("id").get<NodeId>();
    if (node.at("active").get<bool>()) rsg.activate(id);
    rsg.set_state(id, parse_state(node.at("state").get<std::string>()));
    if (!node.at("mark").is_null()) rsg.set_mark(id, node.at("mark").get<NodeId>());
  }
  for (const auto& e : doc.at("edges")) {
    const std::string kind = e.at("kind").get<std::string>();
    if (kind != "plain" && kind != "double") throw std::invalid_argument("unknown edge kind \"" + kind + "\"");
    if (kind == "double") rsg.set_edge_kind(e.at("u").get<NodeId>(), e.at("v").get<NodeId>(), EdgeKind::Double);
  }
  return rsg;
}

}  // namespace mbea
