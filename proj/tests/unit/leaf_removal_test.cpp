#include <doctest.h>

#include "brute_force.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/random.hpp"

using namespace mbea;

namespace {

// a..g = 0..6: leaves {a,b,c}, then {d,e}, then {f,g}.
Graph figure_one() { return Graph::from_edges(7, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}); }

}  // namespace

TEST_CASE("ranks of the seven-node layered example") {
  const Graph g = figure_one();
  const auto ref = brute::simulate_leaf_removal(g);
  const RankAssignment r = leaf_removal_ranks(g);
  CHECK(r.rank == ref.rank);
  CHECK(r.rank == std::vector<int>{1, 1, 2, 3, 4, 5, 6});
  CHECK(r.core_empty());
  CHECK(r.max_rank == 6);
  CHECK(core_subgraph(g, r).graph.size() == 0);
}

TEST_CASE("complete graph is all core, ranked by id") {
  const RankAssignment r = leaf_removal_ranks(complete_graph(5));
  CHECK(r.rank == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.core_size() == 5);
  const CoreSubgraph core = core_subgraph(complete_graph(5), r);
  CHECK(core.graph == complete_graph(5));
  CHECK(core.to_original == std::vector<NodeId>{0, 1, 2, 3, 4});
}

TEST_CASE("single edge: lower id is the pendant") {
  const RankAssignment r = leaf_removal_ranks(path_graph(2));
  CHECK(r.rank == std::vector<int>{1, 2});
  CHECK(r.core_empty());
}

TEST_CASE("isolated nodes are pendants without petiole") {
  const RankAssignment r = leaf_removal_ranks(Graph::from_edges(3, {}));
  CHECK(r.rank == std::vector<int>{1, 1, 1});
}

TEST_CASE("core nodes are ranked above every removed node, breadth first") {
  // Triangle 1-2-3 with a pendant 0 on node 1 and a tail 3-4-5.
  const Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}});
  const RankAssignment r = leaf_removal_ranks(g);
  CHECK(r.rank[0] == 1);
  CHECK(r.rank[1] == 2);
  CHECK(r.rank[5] == 1);
  CHECK(r.rank[4] == 2);
  // 2 and 3 then form an isolated edge.
  CHECK(r.rank[2] == 3);
  CHECK(r.rank[3] == 4);
  CHECK(r.core_empty());

  // Pendant 0, petiole 1, then a five-cycle 2-3-4-5-6 attached at 2.
  const Graph h = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}});
  const RankAssignment q = leaf_removal_ranks(h);
  CHECK(q.core_size() == 5);
  CHECK(q.rank == std::vector<int>{1, 2, 3, 4, 6, 7, 5});
}

TEST_CASE("random graphs agree with the round-by-round simulation") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = generate_er({static_cast<NodeId>(5 + s % 60), 0.5 + static_cast<double>(s % 8) * 0.5, s});
    const auto ref = brute::simulate_leaf_removal(g);
    const RankAssignment r = leaf_removal_ranks(g);
    int max_removed = 0;
    for (NodeId u = 0; u < g.size(); ++u) {
      CHECK(static_cast<bool>(r.in_core[u]) == ref.core[u]);
      CHECK(r.rank[u] >= 1);
      if (!ref.core[u]) {
        CHECK(r.rank[u] == ref.rank[u]);
        max_removed = std::max(max_removed, r.rank[u]);
      }
    }
    std::vector<int> core_ranks;
    for (NodeId u = 0; u < g.size(); ++u)
      if (r.in_core[u]) {
        CHECK(r.rank[u] > max_removed);
        core_ranks.push_back(r.rank[u]);
      }
    std::sort(core_ranks.begin(), core_ranks.end());
    CHECK(std::adjacent_find(core_ranks.begin(), core_ranks.end()) == core_ranks.end());
    CHECK(r.max_rank == *std::max_element(r.rank.begin(), r.rank.end()));
  }
}

TEST_CASE("core subgraph has minimum degree two and is its own core") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = generate_er({200, 3.0 + static_cast<double>(s % 3), s});
    const RankAssignment r = leaf_removal_ranks(g);
    const CoreSubgraph core = core_subgraph(g, r);
    REQUIRE(core.graph.size() == static_cast<NodeId>(r.core_size()));
    for (NodeId u = 0; u < core.graph.size(); ++u) {
      CHECK(core.graph.degree(u) >= 2);
      CHECK(r.in_core[core.to_original[u]]);
    }
    for (const Edge& e : core.graph.edges()) CHECK(g.has_edge(core.to_original[e.u], core.to_original[e.v]));
    const RankAssignment again = leaf_removal_ranks(core.graph);
    CHECK(again.core_size() == static_cast<std::size_t>(core.graph.size()));
  }
}

TEST_CASE("trees are fully removable") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const NodeId n = 2 + static_cast<NodeId>(rng.uniform_inclusive(100));
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.push_back({static_cast<NodeId>(rng.uniform_inclusive(v - 1)), v});
    const Graph tree = Graph::from_edges(n, edges);
    CHECK(leaf_removal_ranks(tree).core_empty());
  }
}

TEST_CASE("pendant and petiole ranks pair up") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = generate_er({100, 2.0, s});
    const RankAssignment r = leaf_removal_ranks(g);
    for (NodeId u = 0; u < g.size(); ++u) {
      if (r.in_core[u] || r.rank[u] % 2 == 1) continue;
      // An even rank belongs to a petiole: some neighbor is its pendant one rank lower.
      const auto nb = g.neighbors(u);
      CHECK(std::any_of(nb.begin(), nb.end(), [&](NodeId w) { return !r.in_core[w] && r.rank[w] == r.rank[u] - 1; }));
    }
  }
}

TEST_CASE("core emptiness straddles c = e") {
  // Below e only small cycle-like cores survive; above e a macroscopic core appears.
  int empty_c2 = 0, empty_c4 = 0;
  double frac_c2 = 0, frac_c4 = 0;
  const int seeds = 200;
  const NodeId n = 2000;
  for (int s = 0; s < seeds; ++s) {
    const auto r2 = leaf_removal_ranks(generate_er({n, 2.0, derive_seed(17, {2, std::uint64_t(s)})}));
    const auto r4 = leaf_removal_ranks(generate_er({n, 4.0, derive_seed(17, {4, std::uint64_t(s)})}));
    empty_c2 += r2.core_empty();
    empty_c4 += r4.core_empty();
    frac_c2 += static_cast<double>(r2.core_size()) / n / seeds;
    frac_c4 += static_cast<double>(r4.core_size()) / n / seeds;
  }
  CHECK(empty_c2 > 0.5 * seeds);
  CHECK(empty_c4 < 0.1 * seeds);
  CHECK(frac_c2 < 0.01);
  CHECK(frac_c4 > 0.2);
}

TEST_CASE("rank order sorts by rank then id") {
  const RankAssignment r = leaf_removal_ranks(figure_one());
  CHECK(rank_order(r) == std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6});
  const RankAssignment p = leaf_removal_ranks(path_graph(3));
  CHECK(rank_order(p) == std::vector<NodeId>{0, 2, 1});
}
