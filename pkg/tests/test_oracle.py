"""Brute-force oracle: dissociation predicate, maximality, subset enumeration."""

import random

import pytest
from hypothesis import given, settings

from dissoc import (
    Graph,
    OracleTimeoutError,
    UnsupportedSizeError,
    complete_bipartite_graph,
    complete_graph,
    count_maximum_bruteforce,
    cycle_graph,
    disjoint_union,
    dissociation_number,
    enumerate_maximal_bruteforce,
    is_dissociation,
    is_maximal,
    path_graph,
)

from strategies import graphs


def test_is_dissociation_on_cycle():
    c4 = cycle_graph(4)
    assert is_dissociation(c4, {0, 1})          # one induced edge
    assert not is_dissociation(c4, {0, 1, 2})   # middle vertex has degree 2
    assert is_dissociation(c4, set())


def test_is_maximal_examples():
    c4 = cycle_graph(4)
    assert is_maximal(c4, {0, 2})        # the diagonal pair cannot be extended
    assert not is_maximal(c4, {0})       # {0, 1} extends it
    assert not is_maximal(path_graph(4), {0, 3})  # extends to {0, 1, 3}


def test_is_maximal_requires_a_dissociation_set():
    with pytest.raises(ValueError):
        is_maximal(cycle_graph(4), {0, 1, 2})


def test_enumerate_k5_gives_all_pairs():
    family = enumerate_maximal_bruteforce(complete_graph(5))
    assert len(family) == 10
    assert all(len(s) == 2 for s in family)


def test_enumerate_c4_gives_six_named_sets():
    family = enumerate_maximal_bruteforce(cycle_graph(4))
    expected = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    assert family.as_lists() == expected


@pytest.mark.parametrize(
    "graph, phi",
    [
        (complete_bipartite_graph(2, 3), 8),
        (complete_bipartite_graph(3, 3), 11),
    ],
)
def test_enumerate_complete_bipartite_counts(graph, phi):
    assert len(enumerate_maximal_bruteforce(graph)) == phi


def test_dissociation_number_examples():
    assert dissociation_number(cycle_graph(4)) == 2
    assert dissociation_number(path_graph(4)) == 3
    assert dissociation_number(Graph(0, ())) == 0


def test_count_maximum_examples():
    assert count_maximum_bruteforce(cycle_graph(4)) == 6
    assert count_maximum_bruteforce(path_graph(4)) == 2
    assert count_maximum_bruteforce(complete_graph(5)) == 10


def test_null_graph_has_only_the_empty_set():
    family = enumerate_maximal_bruteforce(Graph(0, ()))
    assert len(family) == 1
    assert family.as_lists() == [[]]


def test_empty_set_never_reported_for_positive_order():
    for n in range(1, 6):
        family = enumerate_maximal_bruteforce(Graph(n, (0,) * n))
        assert [] not in family.as_lists()


def test_family_is_ordered_by_size_then_lexicographically():
    family = enumerate_maximal_bruteforce(path_graph(4))
    assert family.as_lists() == [[1, 2], [0, 1, 3], [0, 2, 3]]


def test_oracle_rejects_orders_beyond_cap():
    with pytest.raises(UnsupportedSizeError):
        enumerate_maximal_bruteforce(Graph(25, (0,) * 25))


def test_oracle_time_guard_raises_instead_of_truncating():
    with pytest.raises(OracleTimeoutError):
        enumerate_maximal_bruteforce(complete_graph(12), time_limit=0.0)


@settings(deadline=None)
@given(graphs(max_order=6))
def test_every_reported_set_is_maximal_dissociation(g):
    for s in enumerate_maximal_bruteforce(g):
        assert is_dissociation(g, s)
        assert is_maximal(g, s)


@settings(deadline=None)
@given(graphs(max_order=6))
def test_maximum_count_never_exceeds_maximal_count(g):
    assert count_maximum_bruteforce(g) <= len(enumerate_maximal_bruteforce(g))


def test_multiplicativity_over_disjoint_unions():
    rng = random.Random(7)
    for _ in range(40):
        na, nb = rng.randint(1, 8), rng.randint(1, 8)
        a = Graph.from_edge_mask(na, rng.getrandbits(na * (na - 1) // 2))
        b = Graph.from_edge_mask(nb, rng.getrandbits(nb * (nb - 1) // 2))
        phi_a = len(enumerate_maximal_bruteforce(a))
        phi_b = len(enumerate_maximal_bruteforce(b))
        assert len(enumerate_maximal_bruteforce(disjoint_union(a, b))) == phi_a * phi_b
