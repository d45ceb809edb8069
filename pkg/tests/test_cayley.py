import pytest
from hypothesis import given, strategies as st

from stablegroups.catalog import build_group
from stablegroups.cayley import (
    Graph,
    boundary_set,
    cayley_graph,
    connected_components,
    difference_set,
    export_dot,
    graph_components,
    graph_from_edges,
)
from stablegroups.groups import GroupError, parse_subset, subgroup_generated

from conftest import SMALL_SPECS


def test_boundary_examples():
    Z9 = build_group("cyclic:9")
    assert boundary_set(Z9, 1).bits == 0
    assert boundary_set(Z9, Z9.subset([0, 1])).indices() == (1, 8)
    D6 = build_group("dihedral:6")
    S = boundary_set(D6, parse_subset(D6, "e,a,b"))
    assert S == parse_subset(D6, "a,b,a*b,b*a")
    assert difference_set(D6, parse_subset(D6, "e,a,b")) == S.bits | 1
    with pytest.raises(GroupError):
        boundary_set(Z9, 0)


def test_cycle_graph():
    G = build_group("cyclic:7")
    graph = cayley_graph(G, G.subset([1, 6]))
    assert graph.edge_count() == 7
    assert all(graph.degree(v) == 2 for v in range(7))
    assert graph.adjacency[0] == (1 << 1) | (1 << 6)


def test_edgeless_and_bad_connection():
    G = build_group("dihedral:4")
    graph = cayley_graph(G, 0)
    assert graph.edge_count() == 0 and len(connected_components(graph)) == 8
    with pytest.raises(GroupError):
        cayley_graph(G, 1)
    Z5 = build_group("cyclic:5")
    with pytest.raises(GroupError):
        cayley_graph(Z5, 1 << 1)


def test_dihedral_hamiltonian_cycle():
    D = build_group("dihedral:7")
    graph = cayley_graph(D, boundary_set(D, parse_subset(D, "e,a,b")))
    assert all(graph.degree(v) == 4 for v in range(14))
    # e, b, ab, bab, ... alternately left-multiplying by a and b
    a, b = D.marks["a"], D.marks["b"]
    walk, x = [0], 0
    for k in range(13):
        x = D.mul(b if k % 2 == 0 else a, x)
        walk.append(x)
    assert len(set(walk)) == 14
    for u, v in zip(walk, walk[1:] + walk[:1]):
        assert graph.adjacency[u] >> v & 1


def test_components():
    Z6 = build_group("cyclic:6")
    comps = graph_components(Z6, Z6.subset([2, 4]))
    assert [c.indices() for c in comps] == [(0, 2, 4), (1, 3, 5)]
    assert len(graph_components(Z6, Z6.subset([1, 5]))) == 1
    assert len(graph_components(Z6, 0)) == 6


def test_induced_keeps_origin():
    G = build_group("cyclic:6")
    graph = cayley_graph(G, G.subset([1, 5]))
    sub = graph.induced(0b111010)
    assert sub.origin == (1, 3, 4, 5)
    assert sub.labels == ("1", "3", "4", "5")
    assert sub.edge_count() == 2
    sub.check()


def test_graph_check_rejects():
    with pytest.raises(GroupError):
        graph_from_edges(2, [(0, 0)])
    with pytest.raises(GroupError):
        Graph((0b10, 0b00), ("0", "1")).check()


def test_dot_export():
    single = graph_from_edges(1, [])
    assert export_dot(single) == 'graph "cayley" {\n  0 [label="0"];\n}\n'
    Z5 = build_group("cyclic:5")
    dot = export_dot(cayley_graph(Z5, boundary_set(Z5, Z5.subset([0, 1]))))
    assert dot.count(" -- ") == 5 and dot.count("[label=") == 5
    assert dot.splitlines()[6] == "  0 -- 1;"
    A4 = build_group("alt4")
    graph = cayley_graph(A4, boundary_set(A4, parse_subset(A4, "e,b,t")))
    dot = export_dot(graph, A4.subset([0, 1]))
    assert dot.count(" -- ") == 30 and dot.count("palegreen") == 2
    assert dot == export_dot(graph, A4.subset([0, 1]))


@given(st.sampled_from(SMALL_SPECS), st.data())
def test_boundary_properties(spec, data):
    G = build_group(spec)
    elems = data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=G.order))
    A = G.subset(elems)
    S = boundary_set(G, A)
    assert not S.bits & 1
    assert all(G.inv(s) in S for s in S)
    x = data.draw(st.integers(0, G.order - 1))
    assert boundary_set(G, G.left_translate(x, A.bits)) == S
    graph = cayley_graph(G, S)
    graph.check()
    assert all(graph.degree(v) == S.size for v in G.elements())
    H = subgroup_generated(G, S)
    comps = graph_components(G, S)
    assert len(comps) == G.order // H.size
    assert all(c.size == H.size for c in comps)
    assert comps[0] == H
