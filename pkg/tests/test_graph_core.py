import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clusterwalk import graph_core as gc
from clusterwalk.graph_core import (
    ClusterSpec, DisconnectedGraphError, GraphError, cluster, generate, make_graph,
    parse_edge_list, format_edge_list, structure,
)

from conftest import adj, corpus
from oracles import bfs_eccentricity, brute_articulation, brute_bridges, reachable


def test_make_graph_basic():
    k2 = make_graph(2, [(0, 1)])
    assert k2.n == 2 and k2.m == 1
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert list(p4.degrees) == [1, 2, 2, 1]


def test_make_graph_dedups_and_leaves_isolated_vertices():
    g = make_graph(4, [(0, 1), (0, 1), (1, 0)])
    assert g.m == 1
    assert not g.is_connected()
    with pytest.raises(DisconnectedGraphError):
        structure(g)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_make_graph_rejects(edges):
    with pytest.raises(GraphError):
        make_graph(4, edges)


@pytest.mark.parametrize("spec,n,m", [
    (("complete", 4), 4, 6),
    (("complete_bipartite", 2, 2), 4, 4),
    (("conjoined_polygons", 2, 4), 7, 8),
    (("hypercube", 3), 8, 12),
    (("petersen",), 10, 15),
    (("barbell", 4, 3, 4), 10, 15),
    (("friendship", 3), 7, 9),
    (("star", 3), 4, 3),
])
def test_family_counts(spec, n, m):
    g = generate(*spec)
    assert (g.n, g.m) == (n, m)


def test_family_shapes():
    assert generate("complete", 4).is_regular() and generate("complete", 4).degrees[0] == 3
    assert generate("complete_bipartite", 2, 2).is_regular()
    cp = generate("conjoined_polygons", 2, 4)
    assert cp.degrees[0] == 4 and sorted(cp.degrees)[:-1] == [2] * 6
    pet = generate("petersen")
    assert pet.is_regular() and structure(pet).diameter == 2


def test_generate_errors():
    with pytest.raises(GraphError):
        generate("moebius", 5)
    with pytest.raises(GraphError):
        generate("complete", 1)
    with pytest.raises(GraphError):
        generate("cycle", 4, 5)


def test_handshake_on_corpus():
    for g in corpus():
        assert g.degrees.sum() == 2 * g.m


def test_cluster_k2_k2_is_p4():
    cg = cluster(ClusterSpec(generate("complete", 2), generate("complete", 2), 0))
    assert cg.graph.edges() == [(0, 1), (0, 2), (1, 3)]
    assert sorted(cg.graph.degrees) == [1, 1, 2, 2]
    assert cg.contact == (0, 1, 0, 1)


def test_cluster_k3_k3_degrees():
    k3 = generate("complete", 3)
    cg = cluster(ClusterSpec(k3, k3, 0))
    assert (cg.graph.n, cg.graph.m) == (9, 12)
    assert all(cg.graph.degrees[:3] == 4) and all(cg.graph.degrees[3:] == 2)


def test_cluster_role_map():
    c4, k3 = generate("cycle", 4), generate("complete", 3)
    cg = cluster(ClusterSpec(c4, k3, 1))
    for c in range(4):
        block = cg.copy_interior(c)
        assert block == list(range(4 + 2 * c, 6 + 2 * c))
        assert [cg.copy_vertex[v] for v in block] == [0, 2]
        # each interior vertex sits in a triangle with its contact vertex
        for v in block:
            assert c in cg.graph.adjacency[v]


def test_cluster_rejects_bad_inputs():
    k3 = generate("complete", 3)
    with pytest.raises(GraphError):
        ClusterSpec(k3, make_graph(1, []), 0)
    with pytest.raises(GraphError):
        ClusterSpec(k3, k3, 3)
    with pytest.raises(DisconnectedGraphError):
        cluster(ClusterSpec(make_graph(3, [(0, 1)]), k3, 0))


CLUSTER_PARTS = [("complete", 2), ("complete", 3), ("cycle", 4), ("path", 3), ("star", 3)]


@pytest.mark.parametrize("a", CLUSTER_PARTS)
@pytest.mark.parametrize("b", CLUSTER_PARTS)
def test_cluster_counts_every_root(a, b):
    g1, g2 = generate(*a), generate(*b)
    for root in range(g2.n):
        cg = cluster(ClusterSpec(g1, g2, root)).graph
        assert cg.n == g1.n * g2.n
        assert cg.m == g1.m + g1.n * g2.m
        assert cg.is_connected()
        assert structure(cg).diameter >= structure(g1).diameter


@pytest.mark.parametrize("spec,bridges,arts,diam", [
    (("path", 4), [(0, 1), (1, 2), (2, 3)], [1, 2], 3),
    (("complete", 4), [], [], 1),
    (("conjoined_polygons", 2, 4), [], [0], 4),
])
def test_structure_examples(spec, bridges, arts, diam):
    st_ = structure(generate(*spec))
    assert st_.bridges == bridges
    assert st_.articulation_points == arts
    assert st_.diameter == diam


def test_structure_against_brute_force():
    for g in corpus():
        a = adj(g)
        rep = structure(g)
        assert rep.bridges == brute_bridges(a)
        assert rep.articulation_points == brute_articulation(a)
        assert rep.diameter == max(bfs_eccentricity(a, s) for s in range(g.n))
        assert 1 <= rep.diameter <= g.n - 1
        for (u, v), (mi, mj) in zip(rep.bridges, rep.bridge_sides):
            assert mi + mj + 1 == g.m
            side = reachable(a, u, banned_edge=(u, v))
            assert v not in side
            # the side's degree sum counts the bridge once
            assert 2 * mi + 1 == sum(len(a[x]) for x in side)
        non_bridges = [e for e in g.edges() if e not in rep.bridges]
        for e in non_bridges:
            assert len(reachable(a, e[0], banned_edge=e)) == g.n


def test_bipartite_flags():
    assert structure(generate("path", 5)).is_bipartite
    assert structure(generate("hypercube", 3)).is_bipartite
    assert not structure(generate("cycle", 5)).is_bipartite
    rep = structure(generate("cycle", 6))
    assert rep.is_regular and rep.degree == 2


def test_edge_list_round_trip():
    for g in corpus():
        h = parse_edge_list(format_edge_list(g, comment="rt"))
        assert (h.n, h.m, h.adjacency) == (g.n, g.m, g.adjacency)


def test_edge_list_comments_and_trailing_newline():
    g = parse_edge_list("# hello\n3 2\n# mid\n0 1\n1 2")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n1 x\n", 3),
    ("3 2\n0 1\n1 3\n", 3),
    ("3 2\n0 0\n1 2\n", 2),
    ("3 2\n0 1 2\n", 2),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(gc.EdgeListError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == line


def test_edge_list_count_mismatch():
    with pytest.raises(gc.EdgeListError):
        parse_edge_list("3 3\n0 1\n1 2\n")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.data())
def test_random_connected_is_connected(n, data):
    seed = data.draw(st.integers(0, 2**32 - 1))
    p = data.draw(st.floats(0.0, 1.0))
    g = gc.random_connected(n, p, np.random.default_rng(seed))
    assert g.is_connected() and g.n == n
