import itertools
import json

import pytest

import mbea


def brute_min_covers(g):
    n = g.n
    best = None
    covers = []
    for size in range(n + 1):
        for nodes in itertools.combinations(range(n), size):
            s = set(nodes)
            if all(u in s or v in s for u, v in g.edges):
                covers.append(sorted(nodes))
        if covers:
            best = size
            break
    return best, covers


def test_graph_roundtrip():
    g = mbea.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert len(g.edges) == 3
    assert g.neighbors(1) == [0, 2]
    text = mbea.write_edge_list(g)
    assert mbea.parse_edge_list(text) == g


def test_generator_is_deterministic():
    a = mbea.generate_er(50, 3.0, 7)
    b = mbea.generate_er(50, 3.0, 7)
    assert a == b
    assert len(a.edges) == 75
    assert mbea.generate_er(50, 3.0, 8) != a


def test_bad_input_raises():
    with pytest.raises(mbea.GraphFormatError):
        mbea.parse_edge_list("3 1\n0 0\n")
    with pytest.raises(ValueError):
        mbea.generate_er(10, -1.0, 0)


def test_leaf_removal_on_path():
    r = mbea.leaf_removal_ranks(mbea.path_graph(3))
    assert r.rank == [1, 2, 1]
    assert r.core_empty
    c = mbea.leaf_removal_ranks(mbea.cycle_graph(5))
    assert c.core_size == 5


def test_complete_graph_space():
    r = mbea.run_mbea(mbea.complete_graph(5), trace=True)
    assert r.cover_size == 4
    assert r.states.count("unfrozen") == 2
    assert len(r.double_edges) == 1
    assert r.case_counts["D"] == 3
    assert len(r.trace) == 5
    assert len(r.assignments()) == 2
    assert r.validate() == []


def test_core_free_space_matches_brute_force():
    checked = 0
    for seed in range(200):
        g = mbea.generate_er(14, 2.0, seed)
        if not mbea.leaf_removal_ranks(g).core_empty:
            continue
        checked += 1
        r = mbea.run_mbea(g)
        size, covers = brute_min_covers(g)
        assert r.cover_size == size
        assert sorted(r.assignments()) == covers
        assert sorted(mbea.enumerate_min_covers(g)) == covers
        assert mbea.cover_from_rsg(r) in covers
        if checked == 20:
            break
    assert checked == 20


def test_oracle_and_summary():
    g = mbea.cycle_graph(6)
    assert mbea.exact_min_cover(g) == 3
    s = mbea.summarize_space(g)
    assert s["solution_count"] == 2
    assert s["pos_frozen"] == [] and s["neg_frozen"] == []
    with pytest.raises(mbea.BudgetExceeded):
        mbea.exact_min_cover(mbea.generate_er(40, 2.0, 1), budget=10)


def test_exports():
    r = mbea.run_mbea(mbea.path_graph(3))
    doc = json.loads(r.to_json())
    assert isinstance(doc, dict)
    assert r.to_dot().startswith("graph")


def test_experiment_reports():
    csv = mbea.experiment("coverage", [1.0, 2.0], [100], 5, seed=3)
    lines = csv.strip().splitlines()
    assert lines[0].startswith("c,n,instances,x_mean")
    assert len(lines) == 3
    again = mbea.experiment("coverage", [1.0, 2.0], [100], 5, seed=3, workers=2)
    assert again == csv
    doc = json.loads(mbea.experiment("error", [2.0], [20], 5, format="json"))
    assert doc["kind"] == "error"
    with pytest.raises(ValueError):
        mbea.experiment("nope", [1.0], [10], 1)
