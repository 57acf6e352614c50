#include "mbea/mbea.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbea/rsg_ops.hpp"

namespace mbea {

char to_char(CaseLabel c) { return static_cast<char>('A' + static_cast<int>(c)); }

namespace {

void check_ranks(const Graph& g, const RankAssignment& ranks) {
  if (ranks.rank.size() != static_cast<std::size_t>(g.size()))
    throw ContractViolation("rank assignment size differs from graph size");
  const RankAssignment expected = leaf_removal_ranks(g);
  if (expected.rank != ranks.rank || expected.in_core != ranks.in_core)
    throw ContractViolation("rank assignment is not the leaf-removal ranking of this graph");
}

void append(std::vector<NodeId>& to, const std::vector<NodeId>& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

MbeaResult run_mbea(std::shared_ptr<const Graph> graph, std::shared_ptr<const RankAssignment> ranks,
                    const MbeaOptions& options) {
  check_ranks(*graph, *ranks);
  MbeaResult res;
  res.rsg = ReducedSolutionGraph(graph, ranks);
  ReducedSolutionGraph& rsg = res.rsg;
  const Graph& g = *graph;
  Propagator scratch(rsg);
  const bool trace = options.trace;
  const StepObserver& observer = options.observer;
  const bool record = trace || static_cast<bool>(observer);
  rsg.set_journaling(!options.full_odd_cycle_scan);

  std::vector<NodeId> positives;
  std::vector<NodeId> unfrozen;
  for (const NodeId i : rsg.order()) {
    rsg.clear_journal();
    rsg.activate(i);
    positives.clear();
    unfrozen.clear();
    for (NodeId j : g.neighbors(i)) {
      if (rsg.positive(j)) positives.push_back(j);
      else if (rsg.unfrozen(j)) unfrozen.push_back(j);
    }

    scratch.clear();
    bool compatible = true;
    for (NodeId j : unfrozen)
      if (!scratch.assign(j, kCovered)) {
        compatible = false;
        break;
      }
    scratch.clear();

    CaseLabel label;
    std::vector<NodeId> affected;
    auto note = [&](const std::vector<NodeId>& nodes) {
      if (record) append(affected, nodes);
    };
    auto settle = [&](std::vector<NodeId> touched) {
      note(touched);
      auto rechecked = rechecking(rsg);
      note(rechecked);
      if (options.full_odd_cycle_scan) {
        append(touched, rechecked);
        note(break_odd_cycles(rsg, touched));
      } else {
        rsg.journal_push(i);
        rsg.set_journaling(false);
        note(break_new_odd_cycles(rsg, rsg.journal()));
        rsg.set_journaling(true);
      }
    };

    if (positives.size() == 1) {
      if (compatible) {
        label = CaseLabel::A;
        const NodeId pos = positives.front();
        rsg.set_edge_kind(i, pos, EdgeKind::Double);
        auto touched = releasing(rsg, pos, rsg.mark(pos));
        touched.push_back(i);
        settle(std::move(touched));
      } else {
        label = CaseLabel::D;
        rsg.freeze(i, NodeState::NegativelyFrozen, i);
      }
    } else if (positives.size() >= 2) {
      const NodeId shared = rsg.raw_mark(positives.front());
      const bool same_mark = std::all_of(positives.begin(), positives.end(),
                                         [&](NodeId p) { return rsg.raw_mark(p) == shared; });
      if (same_mark && compatible) {
        label = CaseLabel::E;
        // Pair with the cascade root when it is adjacent, else the lowest ranked.
        NodeId pos = positives.front();
        if (std::find(positives.begin(), positives.end(), shared) != positives.end()) {
          pos = shared;
        } else {
          for (NodeId p : positives)
            if (rsg.rank(p) < rsg.rank(pos) || (rsg.rank(p) == rsg.rank(pos) && p < pos)) pos = p;
        }
        rsg.set_edge_kind(i, pos, EdgeKind::Double);
        std::vector<NodeId> touched{i};
        for (NodeId p : positives)
          if (rsg.positive(p)) append(touched, releasing(rsg, p, rsg.mark(p)));
        settle(std::move(touched));
      } else {
        label = CaseLabel::B;
        rsg.freeze(i, NodeState::NegativelyFrozen, i);
      }
    } else if (compatible) {
      label = CaseLabel::C;
      rsg.freeze(i, NodeState::PositivelyFrozen, i);
      note(freezing(rsg, i));
    } else {
      label = CaseLabel::D;
      rsg.freeze(i, NodeState::NegativelyFrozen, i);
    }

    ++res.case_counts[static_cast<std::size_t>(label)];
    if (trace || observer) {
      TraceEntry entry{i, label, std::move(affected)};
      if (observer) observer(rsg, entry);
      if (trace) res.trace.push_back(std::move(entry));
    }
  }

  rsg.set_journaling(false);
  rsg.clear_journal();
  balance_blocks(rsg);
  if (auto a = first_assignment(rsg))
    res.cover_size = a->cover_size;
  else
    res.cover_size = rsg.count(NodeState::NegativelyFrozen) + rsg.count(NodeState::Unfrozen);
  return res;
}

MbeaResult run_mbea(const Graph& graph, const RankAssignment& ranks, bool trace) {
  MbeaOptions options;
  options.trace = trace;
  return run_mbea(std::make_shared<const Graph>(graph), std::make_shared<const RankAssignment>(ranks), options);
}

MbeaResult run_mbea(const Graph& graph, bool trace) {
  auto g = std::make_shared<const Graph>(graph);
  auto r = std::make_shared<const RankAssignment>(leaf_removal_ranks(*g));
  MbeaOptions options;
  options.trace = trace;
  return run_mbea(g, r, options);
}

Assignment cover_from_rsg(const MbeaResult& result) {
  auto a = first_assignment(result.rsg);
  if (!a) throw std::logic_error("reduced solution graph has an unfrozen component without valid assignment");
  return *a;
}

}  // namespace mbea
