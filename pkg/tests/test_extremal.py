"""Sweeps, filters, and the verification suites at unit scale."""

import math
import random

import pytest
from hypothesis import given, settings

from dissoc import (
    BOUNDS,
    SweepFilter,
    SweepRefusedError,
    UnsupportedSizeError,
    canonical_form,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_bipartite,
    is_triangle_free,
    k_star_graph,
    random_bipartite_graph,
    random_graph,
    sweep,
    verify_asymptotic_bounds,
    verify_family_values,
    verify_path_cycle_bounds,
    verify_recurrences,
)
from dissoc.extremal import (
    VerificationReport,
    _bipartite_flags,
    _triangle_free_flags,
)

import numpy as np

from strategies import graphs


def test_bound_constants():
    assert abs(BOUNDS.alpha - 1.5848931924611136) < 1e-12
    assert abs(BOUNDS.beta - 1.5650845800732873) < 1e-12
    assert BOUNDS.alpha > BOUNDS.beta
    assert BOUNDS.path_coefficient == 0.81


def test_triangle_free_predicate():
    assert not is_triangle_free(3, complete_graph(3).adj)
    assert is_triangle_free(4, cycle_graph(4).adj)
    assert is_triangle_free(6, complete_bipartite_graph(3, 3).adj)


def test_bipartite_predicate():
    assert is_bipartite(4, cycle_graph(4).adj)
    assert not is_bipartite(5, cycle_graph(5).adj)
    assert is_bipartite(6, complete_bipartite_graph(3, 3).adj)
    assert not is_bipartite(3, complete_graph(3).adj)


@settings(deadline=None)
@given(graphs(max_order=6))
def test_vectorized_flags_match_scalar_predicates(g):
    masks = np.array([g.edge_mask()], dtype=np.uint64)
    assert bool(_triangle_free_flags(g.order, masks)[0]) == is_triangle_free(g.order, g.adj)
    assert bool(_bipartite_flags(g.order, masks)[0]) == is_bipartite(g.order, g.adj)


def test_sweep_order4_triangle_free():
    rec = sweep(4, SweepFilter(triangle_free=True))
    assert rec.max_value == 6
    assert rec.extremal_canonical == (canonical_form(cycle_graph(4)),)
    assert rec.graphs_scanned == 41  # labeled triangle-free graphs on 4 vertices


def test_sweep_order5_unfiltered_finds_three_classes():
    rec = sweep(5, SweepFilter())
    assert rec.max_value == 10
    assert rec.graphs_scanned == 1024
    expected = sorted(canonical_form(k_star_graph(5, i)) for i in range(3))
    assert sorted(rec.extremal_canonical) == expected


def test_sweep_partitioning_is_invisible():
    base = sweep(5, SweepFilter(triangle_free=True))
    assert sweep(5, SweepFilter(triangle_free=True), chunk_size=100) == base
    assert sweep(5, SweepFilter(triangle_free=True), chunk_size=7, workers=2) == base


def test_sweep_refuses_order8_without_flag():
    with pytest.raises(SweepRefusedError, match="268,435,456"):
        sweep(8)


def test_sweep_rejects_order9_even_with_flag():
    with pytest.raises(UnsupportedSizeError):
        sweep(9, allow_long=True)


def test_sweep_rejects_unknown_quantity():
    with pytest.raises(ValueError):
        sweep(4, quantity="psi")


def test_sweep_order6_unfiltered_maximum_is_15():
    rec = sweep(6, SweepFilter())
    assert rec.max_value == 15
    # attained by the 6-clique minus any partial matching: four classes
    expected = sorted(canonical_form(k_star_graph(6, i)) for i in range(4))
    assert sorted(rec.extremal_canonical) == expected


def test_filter_class_containment_at_order5():
    all_max = sweep(5).max_value
    tf_max = sweep(5, SweepFilter(triangle_free=True)).max_value
    bip_max = sweep(5, SweepFilter(bipartite=True)).max_value
    conn_max = sweep(5, SweepFilter(connected_only=True)).max_value
    assert bip_max <= tf_max <= all_max
    assert conn_max <= all_max


def test_connected_filter_admits_the_right_count():
    rec = sweep(4, SweepFilter(connected_only=True))
    assert rec.graphs_scanned == 38  # connected labeled graphs on 4 vertices


def test_phi_max_records_never_exceed_phi_records():
    for filt in (SweepFilter(), SweepFilter(triangle_free=True)):
        phi_rec = sweep(5, filt, "phi")
        phimax_rec = sweep(5, filt, "phi_max")
        assert phimax_rec.max_value <= phi_rec.max_value


def test_sweep_json_shape():
    doc = sweep(4, SweepFilter(triangle_free=True)).to_json_dict()
    assert set(doc) == {
        "order", "filter", "quantity", "max_value", "extremal_graph6",
        "graphs_scanned", "elapsed_ms", "violations",
    }
    assert doc["violations"] == []
    assert doc["filter"] == "triangle-free"


def test_report_expect_records_violations():
    report = VerificationReport(suite="unit")
    report.expect(True, "ok-check", "fine")
    report.expect(False, "bad-check", "broken", graph6="C~")
    assert report.checks == 2
    assert not report.passed
    assert report.violations[0].check == "bad-check"
    assert report.violations[0].graph6 == "C~"


def test_family_values_small():
    report = verify_family_values(max_t=2)
    assert report.passed
    rows = {(r["family"], r["t"]): r for r in report.details["table"]}
    assert rows[("2C4", 2)]["phi"] == 36
    assert rows[("K2,3 + 1C4", 2)]["phi"] == 48
    assert rows[("P3 + 1C4", 1)]["phi"] == 18


def test_path_cycle_bounds_small():
    report = verify_path_cycle_bounds(n_max=12)
    assert report.passed
    cycles = {row["n"]: row["phi"] for row in report.details["cycles"]}
    assert cycles[4] == 6  # the unique equality case
    paths = {row["n"]: row["phi"] for row in report.details["paths"]}
    assert paths[3] == 3


def test_recurrences_small():
    report = verify_recurrences(
        pivot_trials=20, leaf_trials=10, twin_leaf_trials=5, union_trials=10,
        order_range=(4, 8), seed=11,
    )
    assert report.passed


def test_bounds_small():
    report = verify_asymptotic_bounds(
        order_max=4,
        spot_orders=(8, 9),
        spot_trials_per_order=3,
        bipartite_spot_trials=5,
    )
    assert report.passed
    records = report.details["records"]
    rec = next(r for r in records if r["order"] == 4 and r["filter"] == "triangle-free"
               and r["quantity"] == "phi")
    assert rec["max_value"] == 6
    assert rec["extremal_graph6"] == [canonical_form(cycle_graph(4))]


def test_bounds_refuses_order8_without_flag():
    with pytest.raises(SweepRefusedError):
        verify_asymptotic_bounds(order_max=8)


def test_random_graph_is_seed_deterministic():
    a = random_graph(random.Random(5), 10, 0.5)
    b = random_graph(random.Random(5), 10, 0.5)
    assert a == b


def test_random_bipartite_graph_is_bipartite():
    rng = random.Random(3)
    for _ in range(20):
        g = random_bipartite_graph(rng, 9, 0.6)
        assert is_bipartite(g.order, g.adj)


@settings(deadline=None, max_examples=30)
@given(graphs(min_order=1, max_order=5))
def test_sweep_filter_admits_matches_predicates(g):
    filt = SweepFilter(triangle_free=True, bipartite=True)
    expected = is_triangle_free(g.order, g.adj) and is_bipartite(g.order, g.adj)
    assert filt.admits(g.order, g.adj) == expected
