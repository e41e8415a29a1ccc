"""Graph construction, named families, neighbourhoods, and vertex deletion."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dissoc import (
    FamilySpec,
    FamilySpecError,
    Graph,
    build,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    delete_vertices_mapped,
    disjoint_union,
    k_star_graph,
    neighborhood,
    path_graph,
)

from strategies import graphs


def test_complete_graph_degrees_and_edges():
    g = complete_graph(5)
    assert g.edge_count == 10
    assert all(g.degree(v) == 4 for v in range(5))


def test_k_star_5_2_deletes_first_matching():
    g = k_star_graph(5, 2)
    assert sorted(g.degree(v) for v in range(5)) == [3, 3, 3, 3, 4]
    missing = {(0, 1), (2, 3)}
    present = set(g.edges())
    assert missing.isdisjoint(present)
    assert len(present) == 8


def test_disjoint_union_of_two_cycles():
    g = disjoint_union(cycle_graph(4), cycle_graph(4))
    assert g.order == 8
    assert g.edge_count == 8
    assert g.component_count() == 2


@pytest.mark.parametrize(
    "spec, order, edges",
    [
        (FamilySpec.path(4), 4, 3),
        (FamilySpec.cycle(5), 5, 5),
        (FamilySpec.complete(4), 4, 6),
        (FamilySpec.complete_bipartite(2, 3), 5, 6),
        (FamilySpec.k_star(5, 1), 5, 9),
        (FamilySpec.disjoint_union(FamilySpec.cycle(4), FamilySpec.path(3)), 7, 6),
    ],
)
def test_build_family_specs(spec, order, edges):
    g = build(spec)
    assert g.order == order
    assert g.edge_count == edges


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec.cycle(2),
        FamilySpec.path(0),
        FamilySpec.complete(0),
        FamilySpec.k_star(5, 3),
        FamilySpec.k_star(4, -1),
        FamilySpec.complete_bipartite(0, 3),
    ],
)
def test_build_rejects_bad_parameters(spec):
    with pytest.raises(FamilySpecError):
        build(spec)


def test_neighborhood_on_cycle():
    c4 = cycle_graph(4)
    assert neighborhood(c4, 1) == {0, 2}
    assert neighborhood(c4, 1, closed=True) == {0, 1, 2}


def test_neighborhood_on_complete_graph():
    assert neighborhood(complete_graph(5), 0, closed=True) == {0, 1, 2, 3, 4}


def test_neighborhood_rejects_out_of_range():
    with pytest.raises(IndexError):
        neighborhood(cycle_graph(4), 4)


def test_delete_middle_of_path():
    g, kept = delete_vertices_mapped(path_graph(4), {1})
    assert kept == (0, 2, 3)
    assert g.order == 3
    assert list(g.edges()) == [(1, 2)]  # image of the original edge 2-3
    assert g.degree(0) == 0


def test_delete_closed_neighborhood_of_cycle_vertex():
    g = delete_vertices(cycle_graph(4), {3, 0, 1})
    assert g.order == 1
    assert g.edge_count == 0


def test_delete_nothing_is_identity():
    g = complete_bipartite_graph(2, 3)
    assert delete_vertices(g, set()) == g


def test_delete_rejects_out_of_range():
    with pytest.raises(IndexError):
        delete_vertices(path_graph(3), {5})


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0b00))


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(1, (0b1,))


def test_graph_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0b000))


@given(graphs())
def test_adjacency_is_symmetric_and_irreflexive(g):
    for i in range(g.order):
        assert not (g.adj[i] >> i) & 1
        for j in range(g.order):
            assert ((g.adj[i] >> j) & 1) == ((g.adj[j] >> i) & 1)


@given(graphs(max_order=6))
def test_edge_mask_roundtrip(g):
    assert Graph.from_edge_mask(g.order, g.edge_mask()) == g


@given(graphs(max_order=5), graphs(max_order=5))
def test_union_adds_orders_and_edges(a, b):
    u = disjoint_union(a, b)
    assert u.order == a.order + b.order
    assert u.edge_count == a.edge_count + b.edge_count


@given(graphs(min_order=1, max_order=6), st.data())
def test_delete_map_preserves_adjacency(g, data):
    drop = data.draw(
        st.sets(st.integers(0, g.order - 1), max_size=g.order), label="dropped"
    )
    sub, kept = delete_vertices_mapped(g, drop)
    assert set(kept) == set(range(g.order)) - set(drop)
    for a in range(sub.order):
        for b in range(sub.order):
            assert ((sub.adj[a] >> b) & 1) == ((g.adj[kept[a]] >> kept[b]) & 1)


def test_family_spec_labels():
    spec = FamilySpec.disjoint_union(FamilySpec.cycle(4), FamilySpec.k_star(5, 2))
    assert spec.label() == "cycle(4) + k_star(5,2)"
