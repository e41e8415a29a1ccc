"""Canonical forms: equality exactly for isomorphic graphs of order <= 8."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dissoc import (
    Graph,
    UnsupportedSizeError,
    canonical_form,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    k_star_graph,
    parse_graph6,
)

from strategies import graphs


def test_c4_equals_k4_minus_perfect_matching():
    k4_minus_matching = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert canonical_form(cycle_graph(4)) == canonical_form(k4_minus_matching)


def test_k23_differs_from_c5():
    assert canonical_form(complete_bipartite_graph(2, 3)) != canonical_form(cycle_graph(5))


def test_k5_minus_any_single_edge_is_one_class():
    reference = canonical_form(k_star_graph(5, 1))
    all_edges = set(combinations(range(5), 2))
    for e in all_edges:
        g = Graph.from_edges(5, all_edges - {e})
        assert canonical_form(g) == reference


def test_rejects_order_above_8():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(complete_graph(9))


def test_null_graph_canonical_form():
    assert canonical_form(Graph(0, ())) == "?"


@settings(deadline=None)
@given(graphs(max_order=7), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    relabeled = Graph.from_edges(g.order, [(perm[i], perm[j]) for i, j in g.edges()])
    assert canonical_form(relabeled) == canonical_form(g)


@settings(deadline=None)
@given(graphs(max_order=6))
def test_canonical_form_is_idempotent(g):
    c = canonical_form(g)
    assert canonical_form(parse_graph6(c)) == c


@settings(deadline=None)
@given(graphs(max_order=6))
def test_representative_keeps_order_and_degrees(g):
    rep = parse_graph6(canonical_form(g))
    assert rep.order == g.order
    assert sorted(rep.degree(v) for v in range(rep.order)) == sorted(
        g.degree(v) for v in range(g.order)
    )
