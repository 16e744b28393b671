import itertools
import math
from fractions import Fraction

import pytest

import toughcirc as tc


def test_petersen_invariants():
    p = tc.petersen()
    assert p.order == 10 and p.edge_count == 15
    assert tc.min_degree(p) == 3
    assert tc.vertex_connectivity(p) == 3
    assert tc.toughness(p) == Fraction(4, 3)
    length, witness = tc.circumference(p)
    assert length == 9 and len(witness) == 9
    assert not tc.is_hamiltonian(p)
    assert tc.is_petersen(p)
    assert tc.check(p, "1") == "PetersenException"
    assert tc.check(p, "C1") == "PetersenException"


def test_graph6():
    k3 = tc.parse_graph6("Bw")
    assert k3 == tc.complete(3)
    assert tc.encode_graph6(tc.Graph(2)) == "A?"
    assert tc.toughness(k3) == math.inf
    with pytest.raises(ValueError):
        tc.parse_graph6("B")


def test_heuristic_and_surgery():
    cycle = tc.heuristic_longest_cycle(tc.complete(7), seed=3)
    assert sorted(cycle) == list(range(7))
    assert tc.heuristic_longest_cycle(tc.path_graph(5)) is None
    # Hexagon, one vertex seeing 0 and 3, chord 1-4: a 7-cycle exists.
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 3), (1, 4)]
    g = tc.Graph(7, edges)
    better = tc.improve_once(g, [0, 1, 2, 3, 4, 5])
    assert better is not None and len(better) == 7
    with pytest.raises(ValueError):
        tc.improve_once(g, [0, 2, 4])


def test_verify_records():
    lines = [tc.encode_graph6(tc.petersen()), "B", tc.encode_graph6(tc.complete(5))]
    out = tc.verify(lines, ["1"])
    assert out["counterexamples"] == 0
    assert out["parse_failures"] == 1
    assert len(out["records"]) == 2
    fields = out["records"][0].split("\t")
    assert fields[1:3] == ["1", "PetersenException"]
    assert fields[6:8] == ["4", "3"]


def _nx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_invariants_against_networkx():
    nx = pytest.importorskip("networkx")
    for seed in range(40):
        g = tc.random_gnp(9, 0.45, seed)
        h = _nx(g)
        if nx.is_connected(h):
            assert tc.vertex_connectivity(g) == nx.node_connectivity(h)
        assert tc.is_connected(g) == nx.is_connected(h)
        # Longest cycle via networkx's simple cycle enumeration.
        lengths = [len(c) for c in nx.simple_cycles(h)]
        length, _ = tc.circumference(g)
        if lengths:
            assert length == max(lengths)


def test_enumeration_against_networkx_atlas():
    nx = pytest.importorskip("networkx")
    from networkx.generators.atlas import graph_atlas_g

    counts = {}
    for h in graph_atlas_g()[1:]:
        if nx.is_connected(h):
            counts[h.number_of_nodes()] = counts.get(h.number_of_nodes(), 0) + 1
    for n in range(1, 8):
        assert len(tc.connected_graphs(n)) == counts[n]


def test_toughness_brute_force():
    for seed in range(15):
        g = tc.random_gnp(8, 0.5, seed)
        h = _nx(g)
        best = None
        for k in range(g.order + 1):
            for cut in itertools.combinations(range(g.order), k):
                rest = h.subgraph(set(range(g.order)) - set(cut))
                comps = sum(1 for _ in __import__("networkx").connected_components(rest))
                if comps >= 2:
                    ratio = Fraction(k, comps)
                    best = ratio if best is None else min(best, ratio)
        assert tc.toughness(g) == (math.inf if best is None else best)
