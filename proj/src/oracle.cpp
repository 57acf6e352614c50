#include "mbea/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mbea {

namespace {

std::size_t at(NodeId u) { return static_cast<std::size_t>(u); }

void check_budget(const Graph& g, NodeId budget, const char* what) {
  if (g.size() > budget)
    throw BudgetExceeded(std::string(what) + ": graph has " + std::to_string(g.size()) + " nodes, budget is " +
                         std::to_string(budget));
}

/// Branch and bound on a shrinking graph with an undo trail.
class CoverSolver {
 public:
  explicit CoverSolver(const Graph& g)
      : g_(g), alive_(at(g.size()), 1), deg_(at(g.size())) {
    for (NodeId u = 0; u < g.size(); ++u) deg_[at(u)] = static_cast<int>(g.degree(u));
  }

  std::size_t solve() {
    best_ = greedy_upper_bound();
    search(0);
    return best_;
  }

 private:
  void remove(NodeId v) {
    alive_[at(v)] = 0;
    for (NodeId w : g_.neighbors(v))
      if (alive_[at(w)]) --deg_[at(w)];
    trail_.push_back(v);
  }

  void restore(std::size_t mark) {
    while (trail_.size() > mark) {
      const NodeId v = trail_.back();
      trail_.pop_back();
      alive_[at(v)] = 1;
      for (NodeId w : g_.neighbors(v))
        if (alive_[at(w)]) ++deg_[at(w)];
    }
  }

  std::vector<NodeId> alive_neighbors(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId w : g_.neighbors(v))
      if (alive_[at(w)]) out.push_back(w);
    return out;
  }

  std::size_t greedy_upper_bound() {
    const std::size_t mark = trail_.size();
    std::size_t taken = 0;
    while (true) {
      NodeId best = -1;
      for (NodeId u = 0; u < g_.size(); ++u)
        if (alive_[at(u)] && deg_[at(u)] > 0 && (best < 0 || deg_[at(u)] > deg_[at(best)])) best = u;
      if (best < 0) break;
      remove(best);
      ++taken;
    }
    restore(mark);
    return taken;
  }

  std::size_t matching_bound() const {
    std::vector<char> used(at(g_.size()), 0);
    std::size_t m = 0;
    for (const Edge& e : g_.edges()) {
      if (!alive_[at(e.u)] || !alive_[at(e.v)] || used[at(e.u)] || used[at(e.v)]) continue;
      used[at(e.u)] = used[at(e.v)] = 1;
      ++m;
    }
    return m;
  }

  // Applies degree-0, degree-1 and triangle degree-2 reductions to exhaustion.
  std::size_t reduce() {
    std::size_t taken = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId v = 0; v < g_.size(); ++v) {
        if (!alive_[at(v)]) continue;
        if (deg_[at(v)] == 0) {
          remove(v);
          changed = true;
        } else if (deg_[at(v)] == 1) {
          remove(alive_neighbors(v).front());
          remove(v);
          ++taken;
          changed = true;
        } else if (deg_[at(v)] == 2) {
          auto nb = alive_neighbors(v);
          if (g_.has_edge(nb[0], nb[1])) {
            remove(nb[0]);
            remove(nb[1]);
            remove(v);
            taken += 2;
            changed = true;
          }
        }
      }
    }
    return taken;
  }

  void search(std::size_t taken) {
    const std::size_t mark = trail_.size();
    taken += reduce();
    NodeId pivot = -1;
    for (NodeId u = 0; u < g_.size(); ++u)
      if (alive_[at(u)] && deg_[at(u)] > 0 && (pivot < 0 || deg_[at(u)] > deg_[at(pivot)])) pivot = u;
    if (pivot < 0) {
      best_ = std::min(best_, taken);
      restore(mark);
      return;
    }
    if (taken + matching_bound() >= best_) {
      restore(mark);
      return;
    }
    const std::size_t inner = trail_.size();
    const auto nb = alive_neighbors(pivot);
    remove(pivot);
    search(taken + 1);
    restore(inner);
    for (NodeId w : nb) remove(w);
    remove(pivot);
    search(taken + nb.size());
    restore(mark);
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  std::vector<NodeId> trail_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
};

/// Decides nodes in id order; a node left out forces its neighbors in.
class CoverEnumerator {
 public:
  CoverEnumerator(const Graph& g, std::size_t size) : g_(g), size_(size), spin_(at(g.size()), kUnassigned) {}

  std::vector<Assignment> run() {
    rec(0, 0);
    return std::move(out_);
  }

 private:
  std::size_t open_matching() const {
    std::vector<char> used(at(g_.size()), 0);
    std::size_t m = 0;
    for (const Edge& e : g_.edges()) {
      if (spin_[at(e.u)] != kUnassigned || spin_[at(e.v)] != kUnassigned || used[at(e.u)] || used[at(e.v)]) continue;
      used[at(e.u)] = used[at(e.v)] = 1;
      ++m;
    }
    return m;
  }

  void rec(NodeId v, std::size_t in_cover) {
    if (in_cover > size_ || in_cover + open_matching() > size_) return;
    while (v < g_.size() && spin_[at(v)] != kUnassigned) ++v;
    if (v == g_.size()) {
      out_.push_back(Assignment::from_spins(spin_));
      return;
    }
    // Leave v out: every undecided neighbor goes in, a neighbor already out conflicts.
    std::vector<NodeId> forced;
    bool ok = true;
    for (NodeId w : g_.neighbors(v)) {
      if (spin_[at(w)] == kUncovered) ok = false;
      else if (spin_[at(w)] == kUnassigned) forced.push_back(w);
    }
    if (ok) {
      spin_[at(v)] = kUncovered;
      for (NodeId w : forced) spin_[at(w)] = kCovered;
      rec(v + 1, in_cover + forced.size());
      for (NodeId w : forced) spin_[at(w)] = kUnassigned;
    }
    spin_[at(v)] = kCovered;
    rec(v + 1, in_cover + 1);
    spin_[at(v)] = kUnassigned;
  }

  const Graph& g_;
  std::size_t size_;
  std::vector<Spin> spin_;
  std::vector<Assignment> out_;
};

}  // namespace

std::size_t exact_min_cover(const Graph& g, NodeId budget) {
  check_budget(g, budget, "exact_min_cover");
  return CoverSolver(g).solve();
}

SolutionSet enumerate_min_covers(const Graph& g, NodeId budget) {
  check_budget(g, budget, "enumerate_min_covers");
  SolutionSet s;
  s.min_cover_size = CoverSolver(g).solve();
  s.assignments = CoverEnumerator(g, s.min_cover_size).run();
  s.complete = true;
  s.canonicalize();
  return s;
}

SpaceSummary summarize_space(const SolutionSet& s) {
  if (!s.complete) throw std::invalid_argument("summarize_space needs a complete solution set");
  SpaceSummary out;
  out.solution_count = s.assignments.size();
  if (s.assignments.empty()) return out;
  const std::size_t n = s.assignments.front().spin.size();
  std::vector<char> frozen(n, 1);
  const auto& first = s.assignments.front().spin;
  for (const auto& a : s.assignments)
    for (std::size_t i = 0; i < n; ++i)
      if (a.spin[i] != first[i]) frozen[i] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!frozen[i] || first[i] == kUnassigned) continue;
    (first[i] == kUncovered ? out.pos_frozen : out.neg_frozen).push_back(static_cast<NodeId>(i));
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (frozen[u] || first[u] == kUnassigned) continue;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (frozen[v] || first[v] == kUnassigned) continue;
      const bool opposite = std::all_of(s.assignments.begin(), s.assignments.end(),
                                        [&](const Assignment& a) { return a.spin[u] == -a.spin[v]; });
      if (opposite) out.mutual_pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return out;
}

SpaceDiff diff_spaces(const SolutionSet& candidate, const SolutionSet& reference) {
  SpaceDiff d;
  SolutionSet a = candidate;
  SolutionSet b = reference;
  a.canonicalize();
  b.canonicalize();
  std::set_difference(b.assignments.begin(), b.assignments.end(), a.assignments.begin(), a.assignments.end(),
                      std::back_inserter(d.missing));
  std::set_difference(a.assignments.begin(), a.assignments.end(), b.assignments.begin(), b.assignments.end(),
                      std::back_inserter(d.extra));
  d.equal = d.missing.empty() && d.extra.empty();
  d.subset = d.extra.empty();
  d.size_delta = static_cast<long long>(candidate.min_cover_size) - static_cast<long long>(reference.min_cover_size);
  d.candidate_summary = summarize_space(a);
  d.reference_summary = summarize_space(b);
  d.summaries_equal = d.candidate_summary == d.reference_summary;
  return d;
}

}  // namespace mbea
