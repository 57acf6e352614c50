#include "mbea/rsg_ops.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "mbea/random.hpp"

namespace mbea {

namespace {

std::size_t at(NodeId u) { return static_cast<std::size_t>(u); }

void append(std::vector<NodeId>& to, const std::vector<NodeId>& from) { to.insert(to.end(), from.begin(), from.end()); }

bool has_foreign_positive_neighbor(const ReducedSolutionGraph& rsg, NodeId j, NodeId root) {
  for (NodeId k : rsg.graph().neighbors(j))
    if (rsg.positive(k) && rsg.raw_mark(k) != root) return true;
  return false;
}

void sort_by_rank(const ReducedSolutionGraph& rsg, std::vector<NodeId>& nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
    const int ra = rsg.rank(a);
    const int rb = rsg.rank(b);
    return ra != rb ? ra < rb : a < b;
  });
}

}  // namespace

// --- Propagator -------------------------------------------------------------

Propagator::Propagator(const ReducedSolutionGraph& rsg)
    : rsg_(&rsg), value_(static_cast<std::size_t>(rsg.size()), kUnassigned) {}

bool Propagator::force(NodeId u, Spin value) {
  if (!rsg_->unfrozen(u)) return rsg_->frozen_spin(u) == value;
  Spin& cur = value_[at(u)];
  if (cur == value) return true;
  if (cur != kUnassigned) return false;
  cur = value;
  trail_.push_back(u);
  work_.push_back(u);
  return true;
}

bool Propagator::run(std::optional<std::uint64_t> order_seed) {
  std::optional<Rng> rng;
  if (order_seed) rng.emplace(*order_seed);
  const Graph& g = rsg_->graph();
  while (!work_.empty()) {
    std::size_t pick = work_.size() - 1;
    if (rng) pick = static_cast<std::size_t>(rng->uniform_inclusive(work_.size() - 1));
    const NodeId x = work_[pick];
    work_[pick] = work_.back();
    work_.pop_back();

    auto nbrs = g.neighbors(x);
    auto eids = g.incident_edges(x);
    bool ok = true;
    if (value_[at(x)] == kUncovered) {
      for (std::size_t k = 0; k < nbrs.size() && ok; ++k)
        if (rsg_->active(nbrs[k])) ok = force(nbrs[k], kCovered);
    } else {
      // x is unfrozen, so a Double edge constrains iff the partner is too.
      for (std::size_t k = 0; k < nbrs.size() && ok; ++k)
        if (rsg_->edge_kind(eids[k]) == EdgeKind::Double && rsg_->unfrozen(nbrs[k])) ok = force(nbrs[k], kUncovered);
    }
    if (!ok) {
      work_.clear();
      return false;
    }
  }
  return true;
}

bool Propagator::assign(NodeId u, Spin value) {
  if (!force(u, value)) return false;
  return run(std::nullopt);
}

bool Propagator::assign_shuffled(NodeId u, Spin value, std::uint64_t order_seed) {
  if (!force(u, value)) return false;
  return run(order_seed);
}

void Propagator::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    value_[at(trail_.back())] = kUnassigned;
    trail_.pop_back();
  }
  work_.clear();
}

// --- compatibility ----------------------------------------------------------

namespace {

void check_targets(const ReducedSolutionGraph& rsg, std::span<const NodeId> targets) {
  for (NodeId t : targets) {
    if (t < 0 || t >= rsg.size() || !rsg.active(t))
      throw ContractViolation("compatibility target " + std::to_string(t) + " is not active");
    if (!rsg.unfrozen(t)) throw ContractViolation("compatibility target " + std::to_string(t) + " is frozen");
  }
}

}  // namespace

bool compatible_minus_one(const ReducedSolutionGraph& rsg, std::span<const NodeId> targets) {
  check_targets(rsg, targets);
  Propagator p(rsg);
  for (NodeId t : targets)
    if (!p.assign(t, kCovered)) return false;
  return true;
}

bool compatible_minus_one(const ReducedSolutionGraph& rsg, std::span<const NodeId> targets,
                          std::uint64_t order_seed) {
  check_targets(rsg, targets);
  Propagator p(rsg);
  std::vector<NodeId> shuffled(targets.begin(), targets.end());
  Rng rng(order_seed);
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(rng.uniform_inclusive(i - 1))]);
  for (std::size_t i = 0; i < shuffled.size(); ++i)
    if (!p.assign_shuffled(shuffled[i], kCovered, derive_seed(order_seed, {i}))) return false;
  return true;
}

// --- freezing / releasing ---------------------------------------------------

std::vector<NodeId> freezing(ReducedSolutionGraph& rsg, NodeId i) {
  if (rsg.state(i) == NodeState::Unfrozen || !rsg.mark(i))
    throw ContractViolation("freezing needs a marked frozen node, got " + std::to_string(i));
  const NodeId root = rsg.raw_mark(i);
  const Graph& g = rsg.graph();
  std::vector<NodeId> frozen;
  std::vector<NodeId> stack{i};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    auto nbrs = g.neighbors(x);
    auto eids = g.incident_edges(x);
    const bool pos = rsg.state(x) == NodeState::PositivelyFrozen;
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId j = nbrs[k];
      if (!rsg.unfrozen(j)) continue;
      if (pos) {
        rsg.freeze(j, NodeState::NegativelyFrozen, root);
      } else {
        if (rsg.edge_kind(eids[k]) != EdgeKind::Double) continue;
        rsg.freeze(j, NodeState::PositivelyFrozen, root);
      }
      frozen.push_back(j);
      stack.push_back(j);
    }
  }
  return frozen;
}

namespace {

// A Double edge left with one frozen endpoint no longer records a live pairing.
void drop_half_frozen_doubles(ReducedSolutionGraph& rsg, NodeId u) {
  if (!rsg.unfrozen(u)) return;
  const Graph& g = rsg.graph();
  const auto nb = g.neighbors(u);
  const auto inc = g.incident_edges(u);
  for (std::size_t k = 0; k < nb.size(); ++k)
    if (rsg.edge_kind(inc[k]) == EdgeKind::Double && rsg.active(nb[k]) && !rsg.unfrozen(nb[k]))
      rsg.set_edge_kind(inc[k], EdgeKind::Plain);
}

}  // namespace

std::vector<NodeId> releasing(ReducedSolutionGraph& rsg, NodeId i, std::optional<NodeId> root) {
  std::vector<NodeId> released{i};
  rsg.unfreeze(i);
  if (!root) {
    drop_half_frozen_doubles(rsg, i);
    return released;
  }
  const Graph& g = rsg.graph();
  std::vector<NodeId> stack{i};
  std::vector<NodeId> kept;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (NodeId j : g.neighbors(x)) {
      if (!rsg.active(j) || rsg.raw_mark(j) != *root) continue;
      if (rsg.state(j) == NodeState::NegativelyFrozen && has_foreign_positive_neighbor(rsg, j, *root)) {
        kept.push_back(j);
        continue;
      }
      rsg.unfreeze(j);
      released.push_back(j);
      stack.push_back(j);
    }
  }
  // A node the check kept frozen keeps its freezing influence.
  bool refroze = false;
  for (NodeId j : kept)
    if (rsg.negative(j) && !freezing(rsg, j).empty()) refroze = true;
  if (refroze) std::erase_if(released, [&](NodeId r) { return !rsg.unfrozen(r); });
  for (NodeId r : released) drop_half_frozen_doubles(rsg, r);
  return released;
}

// --- rechecking / odd cycles ------------------------------------------------

std::vector<NodeId> rechecking(ReducedSolutionGraph& rsg) {
  const Graph& g = rsg.graph();
  const auto& order = rsg.order();
  std::vector<NodeId> changed;
  // Nodes whose step had no net effect because a kept node froze them back.
  std::vector<char> settled(static_cast<std::size_t>(rsg.size()), 0);

  // Scans in (rank, id) order. After a change only nodes next to a changed
  // node can start to qualify, so those behind the scan go on a heap instead
  // of restarting the scan; the lowest qualifying node is always taken first.
  std::vector<std::size_t> heap;
  std::vector<char> queued(static_cast<std::size_t>(rsg.size()), 0);
  auto later = std::greater<std::size_t>();
  std::size_t next = 0;
  const bool was_journaling = rsg.journaling();
  const std::size_t journal_start = rsg.journal().size();
  std::size_t cursor = journal_start;
  rsg.set_journaling(true);

  while (true) {
    NodeId u;
    if (!heap.empty() && heap.front() < next) {
      std::pop_heap(heap.begin(), heap.end(), later);
      u = order[heap.back()];
      heap.pop_back();
      queued[at(u)] = 0;
    } else if (next < order.size()) {
      u = order[next++];
    } else {
      break;
    }
    if (settled[at(u)] || !rsg.negative(u) || !rsg.mark(u)) continue;
    NodeId only = -1;
    int positives = 0;
    for (NodeId k : g.neighbors(u)) {
      if (rsg.positive(k)) {
        only = k;
        if (++positives > 1) break;
      }
    }
    if (positives != 1) continue;
    const NodeId old_mark = rsg.raw_mark(u);
    const NodeId only_mark = rsg.raw_mark(only);
    const EdgeId e = *g.find_edge(u, only);
    const EdgeKind old_kind = rsg.edge_kind(e);
    rsg.unfreeze(only);
    rsg.set_edge_kind(e, EdgeKind::Double);
    const auto released = releasing(rsg, u, old_mark);
    if (released.empty() && rsg.positive(only) && rsg.negative(u)) {
      rsg.set_mark(u, old_mark);
      rsg.set_mark(only, only_mark);
      rsg.set_edge_kind(e, old_kind);
      settled[at(u)] = 1;
      rsg.truncate_journal(cursor);
      continue;
    }
    drop_half_frozen_doubles(rsg, only);
    changed.push_back(only);
    append(changed, released);
    for (; cursor < rsg.journal().size(); ++cursor) {
      const NodeId x = rsg.journal()[cursor];
      auto push = [&](NodeId w) {
        const std::size_t pw = rsg.position(w);
        if (pw >= next || queued[at(w)]) return;
        queued[at(w)] = 1;
        heap.push_back(pw);
        std::push_heap(heap.begin(), heap.end(), later);
      };
      push(x);
      for (NodeId w : g.neighbors(x)) push(w);
    }
  }
  rsg.set_journaling(was_journaling);
  if (!was_journaling) rsg.truncate_journal(journal_start);
  return changed;
}

std::vector<std::vector<NodeId>> unfrozen_components(const ReducedSolutionGraph& rsg) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(static_cast<std::size_t>(rsg.size()), 0);
  const Graph& g = rsg.graph();
  for (NodeId s = 0; s < rsg.size(); ++s) {
    if (seen[at(s)] || !rsg.unfrozen(s)) continue;
    std::vector<NodeId> comp{s};
    seen[at(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (NodeId w : g.neighbors(comp[head]))
        if (!seen[at(w)] && rsg.unfrozen(w)) {
          seen[at(w)] = 1;
          comp.push_back(w);
        }
    sort_by_rank(rsg, comp);
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Freezes negatively, in the given order, every unfrozen candidate whose +1
// propagation fails, applying its freezing influence. Freezing such a node
// only fixes a value every solution already has, so candidates tested earlier
// keep passing and one pass reaches the fixed point. A passing propagation
// extends to a solution, so every node it sets to +1 passes as well.
std::vector<NodeId> freeze_failing(ReducedSolutionGraph& rsg, const std::vector<NodeId>& candidates) {
  std::vector<NodeId> frozen;
  Propagator p(rsg);
  std::vector<char> passed(static_cast<std::size_t>(rsg.size()), 0);
  for (NodeId u : candidates) {
    if (!rsg.unfrozen(u) || passed[at(u)]) continue;
    p.clear();
    if (p.assign(u, kUncovered)) {
      for (NodeId t : p.trail())
        if (p.value(t) == kUncovered) passed[at(t)] = 1;
      continue;
    }
    p.clear();
    rsg.freeze(u, NodeState::NegativelyFrozen, u);
    frozen.push_back(u);
    append(frozen, freezing(rsg, u));
  }
  p.clear();
  return frozen;
}

}  // namespace

std::vector<NodeId> break_odd_cycles(ReducedSolutionGraph& rsg, std::span<const NodeId> touched) {
  const Graph& g = rsg.graph();
  std::vector<char> seen(static_cast<std::size_t>(rsg.size()), 0);
  std::vector<NodeId> nodes;
  for (NodeId t : touched) {
    if (seen[at(t)] || !rsg.unfrozen(t)) continue;
    seen[at(t)] = 1;
    const std::size_t start = nodes.size();
    nodes.push_back(t);
    for (std::size_t head = start; head < nodes.size(); ++head)
      for (NodeId w : g.neighbors(nodes[head]))
        if (!seen[at(w)] && rsg.unfrozen(w)) {
          seen[at(w)] = 1;
          nodes.push_back(w);
        }
  }
  sort_by_rank(rsg, nodes);
  return freeze_failing(rsg, nodes);
}

std::vector<NodeId> balance_blocks(ReducedSolutionGraph& rsg) {
  const Graph& g = rsg.graph();
  std::vector<signed char> side(static_cast<std::size_t>(rsg.size()), -1);
  std::vector<std::array<std::vector<NodeId>, 2>> blocks;
  for (NodeId s : rsg.order()) {
    if (!rsg.unfrozen(s) || side[at(s)] >= 0) continue;
    auto& b = blocks.emplace_back();
    side[at(s)] = 0;
    b[0].push_back(s);
    std::vector<NodeId> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      const auto nb = g.neighbors(u);
      const auto inc = g.incident_edges(u);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (!rsg.constrains_pair(inc[k]) || side[at(nb[k])] >= 0) continue;
        side[at(nb[k])] = static_cast<signed char>(1 - side[at(u)]);
        b[at(side[at(nb[k])])].push_back(nb[k]);
        queue.push_back(nb[k]);
      }
    }
  }

  std::vector<NodeId> frozen;
  Propagator p(rsg);
  for (const auto& b : blocks) {
    if (b[0].size() == b[1].size() || !rsg.unfrozen(b[0].front())) continue;
    const std::size_t big = b[0].size() > b[1].size() ? 0 : 1;
    NodeId seed = -1;
    for (std::size_t choice : {big, 1 - big}) {
      if (b[choice].empty()) continue;
      p.clear();
      if (p.assign(b[choice].front(), kUncovered)) {
        seed = b[choice].front();
        break;
      }
    }
    p.clear();
    if (seed < 0) continue;
    rsg.freeze(seed, NodeState::PositivelyFrozen, seed);
    std::vector<NodeId> now{seed};
    append(now, freezing(rsg, seed));
    append(frozen, now);
    append(frozen, break_new_odd_cycles(rsg, now));
  }
  return frozen;
}

std::vector<NodeId> break_new_odd_cycles(ReducedSolutionGraph& rsg, std::span<const NodeId> fresh) {
  const Graph& g = rsg.graph();
  const auto n = static_cast<std::size_t>(rsg.size());
  // Literal 2u is "u = +1", 2u+1 is "u = -1". Implications run +1 -> -1 along
  // every edge and -1 -> +1 along constraining Double edges; walk them
  // backwards from the literals that are new this step.
  std::vector<char> reached(2 * n, 0);
  std::vector<std::size_t> stack;
  auto reach = [&](std::size_t lit) {
    if (reached[lit]) return;
    reached[lit] = 1;
    stack.push_back(lit);
  };
  for (NodeId x : fresh) {
    if (rsg.unfrozen(x)) {
      reach(2 * at(x));
      reach(2 * at(x) + 1);
    } else if (rsg.positive(x)) {
      for (NodeId w : g.neighbors(x))
        if (rsg.unfrozen(w)) reach(2 * at(w));
    }
  }
  while (!stack.empty()) {
    const std::size_t lit = stack.back();
    stack.pop_back();
    const auto w = static_cast<NodeId>(lit / 2);
    const auto nb = g.neighbors(w);
    const auto inc = g.incident_edges(w);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (!rsg.unfrozen(nb[k])) continue;
      if (lit % 2 == 1) reach(2 * at(nb[k]));
      else if (rsg.constrains_pair(inc[k])) reach(2 * at(nb[k]) + 1);
    }
  }

  std::vector<NodeId> candidates;
  for (std::size_t u = 0; u < n; ++u)
    if (reached[2 * u]) candidates.push_back(static_cast<NodeId>(u));
  sort_by_rank(rsg, candidates);
  return freeze_failing(rsg, candidates);
}

// --- enumeration ------------------------------------------------------------

namespace {

/// Depth-first search over the nodes of one component in the given order,
/// +1 before -1. `emit` returns false to stop the search.
void search_component(Propagator& p, const std::vector<NodeId>& vars,
                      const std::function<bool()>& emit) {
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    while (idx < vars.size() && p.value(vars[idx]) != kUnassigned) ++idx;
    if (idx == vars.size()) return emit();
    for (Spin v : {kUncovered, kCovered}) {
      const std::size_t mark = p.trail_size();
      if (p.assign(vars[idx], v) && !rec(idx + 1)) {
        p.undo_to(mark);
        return false;
      }
      p.undo_to(mark);
    }
    return true;
  };
  rec(0);
}

std::vector<Spin> frozen_base(const ReducedSolutionGraph& rsg) {
  std::vector<Spin> base(static_cast<std::size_t>(rsg.size()), kUnassigned);
  for (NodeId u = 0; u < rsg.size(); ++u)
    if (rsg.active(u)) base[at(u)] = rsg.frozen_spin(u);
  return base;
}

}  // namespace

SolutionSet enumerate_assignments(const ReducedSolutionGraph& rsg, std::size_t limit) {
  SolutionSet out;
  const auto comps = unfrozen_components(rsg);
  Propagator p(rsg);

  // Local solutions per component, as spin vectors over the component nodes.
  std::vector<std::vector<std::vector<Spin>>> local(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& vars = comps[c];
    search_component(p, vars, [&]() {
      std::vector<Spin> s(vars.size());
      for (std::size_t k = 0; k < vars.size(); ++k) s[k] = p.value(vars[k]);
      local[c].push_back(std::move(s));
      if (limit != 0 && local[c].size() >= limit) {
        out.complete = false;
        return false;
      }
      return true;
    });
    p.clear();
    if (local[c].empty()) return SolutionSet{{}, 0, out.complete};
  }

  std::vector<Spin> spins = frozen_base(rsg);
  std::vector<std::size_t> pick(comps.size(), 0);
  while (true) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (std::size_t k = 0; k < comps[c].size(); ++k) spins[at(comps[c][k])] = local[c][pick[c]][k];
    out.assignments.push_back(Assignment::from_spins(spins));
    if (limit != 0 && out.assignments.size() >= limit) {
      // Stop if anything remains unvisited.
      bool more = false;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (pick[c] + 1 < local[c].size()) more = true;
      if (more) out.complete = false;
      break;
    }
    std::size_t c = 0;
    while (c < comps.size() && ++pick[c] == local[c].size()) pick[c++] = 0;
    if (c == comps.size()) break;
  }
  out.min_cover_size = out.assignments.front().cover_size;
  for (const auto& a : out.assignments) out.min_cover_size = std::min(out.min_cover_size, a.cover_size);
  return out;
}

std::optional<Assignment> first_assignment(const ReducedSolutionGraph& rsg) {
  auto comps = unfrozen_components(rsg);
  std::vector<Spin> spins = frozen_base(rsg);
  Propagator p(rsg);
  for (auto& vars : comps) {
    std::sort(vars.begin(), vars.end());
    bool found = false;
    search_component(p, vars, [&]() {
      for (NodeId u : vars) spins[at(u)] = p.value(u);
      found = true;
      return false;
    });
    p.clear();
    if (!found) return std::nullopt;
  }
  return Assignment::from_spins(std::move(spins));
}

}  // namespace mbea
