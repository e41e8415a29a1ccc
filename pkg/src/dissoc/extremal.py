"""Exhaustive desk-scale verification of dissociation-set extremal facts.

Sweeps iterate every labeled graph of a given order by edge bitmask, filter by
graph class (triangle-free / bipartite / connected), compute phi or phi' via
the branching enumerator, and report the maximum together with all attaining
graphs up to isomorphism.  The verify_* operations package the checkable
claims: closed-form family values, the 10^(n/5) and 6^(n/4) bounds with their
equality characterizations, the per-pivot counting recurrences, and the
path/cycle bounds.

Bound comparisons put exact integers on the left and floats on the right with
a 1e-9 relative guard; equality claims are decided in exact integer
arithmetic whenever the bound is an integer power.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .branching import count, classify_by_pivot, maximal_masks
from .canonical import canonical_form
from .graph6 import serialize_graph6
from .graphs import (
    Graph,
    UnsupportedSizeError,
    complete_bipartite_graph,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    edge_index,
    edge_pairs,
    k_star_graph,
    neighborhood,
    path_graph,
)

REL_GUARD = 1e-9
SWEEP_FULL_ORDER_CAP = 7
SWEEP_LONG_ORDER_CAP = 8
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)
_CHUNK = 1 << 20


class SweepRefusedError(RuntimeError):
    """A long-running sweep was requested without the explicit opt-in flag."""


@dataclass(frozen=True)
class BoundConstants:
    """Growth constants of the two universal bounds, and the path coefficient."""

    alpha: float = 10 ** 0.2      # ~1.58489, general graphs
    beta: float = 6 ** 0.25       # ~1.56508, triangle-free graphs
    path_coefficient: float = 0.81


BOUNDS = BoundConstants()


def _le(value: int, bound: float) -> bool:
    return value <= bound * (1.0 + REL_GUARD)


def _lt(value: int, bound: float) -> bool:
    return value < bound * (1.0 - REL_GUARD)


# ---------------------------------------------------------------------------
# graph-class predicates and random models
# ---------------------------------------------------------------------------

def is_triangle_free(order: int, adj: Sequence[int]) -> bool:
    for i in range(order):
        m = adj[i] >> (i + 1)
        while m:
            j = (m & -m).bit_length() + i
            m &= m - 1
            if adj[i] & adj[j]:
                return False
    return True


def is_bipartite(order: int, adj: Sequence[int]) -> bool:
    color0 = 0
    color1 = 0
    seen = 0
    full = (1 << order) - 1
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        frontier = start
        color0 |= start
        side = 0
        while frontier:
            seen |= frontier
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= adj[v]
            nxt &= ~seen
            side ^= 1
            if side:
                color1 |= nxt
            else:
                color0 |= nxt
            frontier = nxt
    for v in range(order):
        own = color0 if (color0 >> v) & 1 else color1
        if adj[v] & own:
            return False
    return True


@dataclass(frozen=True)
class SweepFilter:
    """Class restriction applied during a sweep.  Filters combine by AND;
    bipartiteness already implies triangle-freeness (asserted, not assumed)."""

    triangle_free: bool = False
    bipartite: bool = False
    connected_only: bool = False

    def admits(self, order: int, adj: Sequence[int]) -> bool:
        if self.triangle_free and not is_triangle_free(order, adj):
            return False
        if self.bipartite and not is_bipartite(order, adj):
            return False
        if self.connected_only and not Graph(order, tuple(adj)).is_connected():
            return False
        return True

    def label(self) -> str:
        parts = []
        if self.triangle_free:
            parts.append("triangle-free")
        if self.bipartite:
            parts.append("bipartite")
        if self.connected_only:
            parts.append("connected")
        return "+".join(parts) if parts else "all"


def random_graph(rng: random.Random, order: int, p: float) -> Graph:
    edges = [e for e in combinations(range(order), 2) if rng.random() < p]
    return Graph.from_edges(order, edges)


def random_bipartite_graph(rng: random.Random, order: int, p: float) -> Graph:
    side = [rng.randrange(2) for _ in range(order)]
    edges = [
        (i, j)
        for i, j in combinations(range(order), 2)
        if side[i] != side[j] and rng.random() < p
    ]
    return Graph.from_edges(order, edges)


# ---------------------------------------------------------------------------
# vectorized labeled-graph scanning
# ---------------------------------------------------------------------------

def _triangle_masks(order: int) -> list[int]:
    return [
        (1 << edge_index(a, b)) | (1 << edge_index(a, c)) | (1 << edge_index(b, c))
        for a, b, c in combinations(range(order), 3)
    ]


def _bipartition_intra_masks(order: int) -> list[int]:
    out = []
    for assignment in range(1 << max(0, order - 1)):
        colors = [0] + [(assignment >> (i - 1)) & 1 for i in range(1, order)]
        intra = 0
        for i, j in combinations(range(order), 2):
            if colors[i] == colors[j]:
                intra |= 1 << edge_index(i, j)
        out.append(intra)
    return out


def _triangle_free_flags(order: int, masks: np.ndarray) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    for t in _triangle_masks(order):
        ok &= (masks & t) != t
    return ok


def _bipartite_flags(order: int, masks: np.ndarray) -> np.ndarray:
    ok = np.zeros(masks.shape, dtype=bool)
    for intra in _bipartition_intra_masks(order):
        ok |= (masks & intra) == 0
    return ok


def _adjacency_of_mask(order: int, mask: int, pairs: list[tuple[int, int]]) -> list[int]:
    adj = [0] * order
    while mask:
        k = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        i, j = pairs[k]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _quantity_of_masks(family: list[int], quantity: str) -> int:
    if quantity == "phi":
        return len(family)
    psi = 0
    for m in family:
        c = m.bit_count()
        if c > psi:
            psi = c
    return sum(1 for m in family if m.bit_count() == psi)


def _scan_chunk(args: tuple) -> tuple[int, int, list[int]]:
    """Scan edge masks [lo, hi): returns (admitted, best value, witness masks)."""
    order, filt, quantity, lo, hi = args
    masks = np.arange(lo, hi, dtype=np.uint64)
    if filt.triangle_free:
        masks = masks[_triangle_free_flags(order, masks)]
    if filt.bipartite:
        masks = masks[_bipartite_flags(order, masks)]
    pairs = edge_pairs(order)
    admitted = 0
    best = -1
    witnesses: list[int] = []
    need_connected = filt.connected_only
    for mask in masks.tolist():
        adj = _adjacency_of_mask(order, mask, pairs)
        if need_connected and not Graph(order, tuple(adj)).is_connected():
            continue
        admitted += 1
        val = _quantity_of_masks(maximal_masks(order, adj), quantity)
        if val > best:
            best = val
            witnesses = [mask]
        elif val == best:
            witnesses.append(mask)
    return admitted, best, witnesses


@dataclass(frozen=True)
class ExtremalRecord:
    """Result of one sweep: the maximum value and its attaining graphs.

    extremal_canonical holds one canonical graph6 string per isomorphism
    class; the canonical string doubles as the class representative.
    """

    order: int
    filter: SweepFilter
    quantity: str
    max_value: int
    extremal_canonical: tuple[str, ...]
    graphs_scanned: int
    elapsed_ms: float = field(compare=False)  # timing is metadata, not a result

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "filter": self.filter.label(),
            "quantity": self.quantity,
            "max_value": self.max_value,
            "extremal_graph6": list(self.extremal_canonical),
            "graphs_scanned": self.graphs_scanned,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "violations": [],
        }


def _check_sweep_order(order: int, allow_long: bool) -> None:
    if order > SWEEP_LONG_ORDER_CAP:
        raise UnsupportedSizeError(
            f"exhaustive sweeps are capped at order {SWEEP_LONG_ORDER_CAP}, got {order}"
        )
    if order > SWEEP_FULL_ORDER_CAP and not allow_long:
        n_graphs = 1 << (order * (order - 1) // 2)
        raise SweepRefusedError(
            f"a full sweep at order {order} iterates {n_graphs:,} labeled graphs "
            f"(hours of CPU time on one core); pass allow_long=True / --allow-long "
            f"to run it anyway"
        )


def sweep(
    order: int,
    filt: SweepFilter = SweepFilter(),
    quantity: str = "phi",
    *,
    allow_long: bool = False,
    workers: int = 1,
    chunk_size: int = _CHUNK,
) -> ExtremalRecord:
    """Scan all 2^C(order,2) labeled graphs and record the maximum quantity.

    graphs_scanned counts the graphs admitted by the filter.  The edge-mask
    range is processed in chunks; with workers > 1 the chunks are distributed
    over a process pool, and the merge is order-independent, so the record is
    identical for any partitioning.
    """
    if quantity not in ("phi", "phi_max"):
        raise ValueError(f"quantity must be 'phi' or 'phi_max', got {quantity!r}")
    _check_sweep_order(order, allow_long)
    t0 = time.perf_counter()
    total = 1 << (order * (order - 1) // 2)
    chunks = [
        (order, filt, quantity, lo, min(lo + chunk_size, total))
        for lo in range(0, total, chunk_size)
    ]
    if workers > 1 and len(chunks) > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(workers) as pool:
            results = pool.map(_scan_chunk, chunks)
    else:
        results = [_scan_chunk(c) for c in chunks]

    scanned = 0
    best = -1
    witnesses: list[int] = []
    for admitted, chunk_best, chunk_wit in results:
        scanned += admitted
        if chunk_best > best:
            best = chunk_best
            witnesses = list(chunk_wit)
        elif chunk_best == best:
            witnesses.extend(chunk_wit)
    classes = sorted({canonical_form(Graph.from_edge_mask(order, m)) for m in witnesses})
    return ExtremalRecord(
        order=order,
        filter=filt,
        quantity=quantity,
        max_value=best,
        extremal_canonical=tuple(classes),
        graphs_scanned=scanned,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    check: str
    detail: str
    graph6: str | None = None

    def to_json_dict(self) -> dict:
        out = {"check": self.check, "detail": self.detail}
        if self.graph6 is not None:
            out["graph6"] = self.graph6
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def expect(self, ok: bool, check: str, detail: str, graph6: str | None = None) -> None:
        self.checks += 1
        if not ok:
            self.violations.append(Violation(check, detail, graph6))

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "violations": [v.to_json_dict() for v in self.violations],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# closed-form family values
# ---------------------------------------------------------------------------

def _kstar_variants(m: int) -> list[tuple[str, Graph]]:
    return [(f"K{m}*(i={i})", k_star_graph(m, i)) for i in range(m // 2 + 1)]


def _block_product(*choices: list[tuple[str, Graph]]) -> list[tuple[str, Graph]]:
    """All multisets picking one variant per block, for interchangeable blocks."""
    out: list[tuple[str, Graph]] = []
    if not choices:
        return [("", Graph(0, ()))]
    # group identical block types so variant multisets are not double-counted
    first, rest = choices[0], choices[1:]
    same = 1
    while same < len(choices) and choices[same] is first:
        same += 1
    for combo in combinations_with_replacement(range(len(first)), same):
        head_label = " + ".join(first[k][0] for k in combo)
        head = [first[k][1] for k in combo]
        for tail_label, tail in _block_product(*choices[same:]):
            label = head_label if not tail_label else f"{head_label} + {tail_label}"
            out.append((label, disjoint_union(*head, tail)))
    return out


def _family_rows(max_t: int) -> list[tuple[str, int, Graph, int, bool]]:
    """(label, t, graph, expected phi, all blocks preserve phi'==phi)."""
    rows: list[tuple[str, int, Graph, int, bool]] = []
    c4 = cycle_graph(4)
    k23 = complete_bipartite_graph(2, 3)
    k33 = complete_bipartite_graph(3, 3)
    p3 = path_graph(3)
    k4s = _kstar_variants(4)
    k5s = _kstar_variants(5)
    k6s = _kstar_variants(6)

    for t in range(1, max_t + 1):
        tc4 = disjoint_union(*[c4] * t)
        rows.append((f"{t}C4", t, tc4, 6 ** t, True))
        rows.append(
            (f"K2,3 + {t - 1}C4", t, disjoint_union(k23, *[c4] * (t - 1)), 8 * 6 ** (t - 1), False)
        )
        rows.append(
            (f"K3,3 + {t - 1}C4", t, disjoint_union(k33, *[c4] * (t - 1)), 11 * 6 ** (t - 1), False)
        )
        rows.append((f"P3 + {t}C4", t, disjoint_union(p3, *[c4] * t), 3 * 6 ** t, False))

        for label, g in _block_product(*[k5s] * t):
            rows.append((label, t, g, 10 ** t, True))
        for label, g in _block_product(k6s, *[k5s] * (t - 1)):
            rows.append((label, t, g, 15 * 10 ** (t - 1), True))
        if t >= 2:
            for label, g in _block_product(k6s, k6s, *[k5s] * (t - 2)):
                rows.append((label, t, g, 225 * 10 ** (t - 2), True))
        for label, g in _block_product(k4s, k4s, *[k5s] * (t - 1)):
            rows.append((label, t, g, 36 * 10 ** (t - 1), True))
        for label, g in _block_product(k4s, *[k5s] * t):
            rows.append((label, t, g, 6 * 10 ** t, True))
    return rows


def verify_family_values(max_t: int = 3) -> VerificationReport:
    """Check the closed-form counts of the extremal families for t = 1..max_t."""
    t0 = time.perf_counter()
    report = VerificationReport(suite="families")
    table = []
    for label, t, g, expected, phi_max_equal in _family_rows(max_t):
        result = count(g)
        report.expect(
            result.phi == expected,
            "family-value",
            f"{label} (t={t}, n={g.order}): expected phi={expected}, got {result.phi}",
        )
        if phi_max_equal:
            report.expect(
                result.phi_max == result.phi,
                "family-phi-max",
                f"{label} (t={t}): expected phi'=phi={result.phi}, got phi'={result.phi_max}",
            )
        table.append(
            {
                "family": label,
                "t": t,
                "n": g.order,
                "expected": expected,
                "phi": result.phi,
                "phi_max": result.phi_max,
            }
        )
    report.details["table"] = table
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


# ---------------------------------------------------------------------------
# universal bounds and extremal characterizations
# ---------------------------------------------------------------------------

def _expected_general_equality_classes(order: int) -> set[str]:
    """Canonical forms of the graphs attaining 10^(n/5): unions of 5-cliques
    with at most two matching edges removed."""
    if order % 5:
        return set()
    t = order // 5
    out = set()
    for combo in combinations_with_replacement(range(3), t):
        out.add(canonical_form(disjoint_union(*(k_star_graph(5, i) for i in combo))))
    return out


def _expected_triangle_free_equality_classes(order: int) -> set[str]:
    """Canonical forms attaining 6^(n/4) among triangle-free graphs: unions of
    4-cycles."""
    if order % 4:
        return set()
    return {canonical_form(disjoint_union(*[cycle_graph(4)] * (order // 4)))}


def _expected_order8_classes() -> set[str]:
    return {
        canonical_form(disjoint_union(k_star_graph(4, i), k_star_graph(4, j)))
        for i, j in combinations_with_replacement(range(3), 2)
    }


def _scan_bounds_order(order: int, report: VerificationReport) -> list[dict]:
    """Full labeled-graph scan at one order: bound checks plus extremal records."""
    pairs = edge_pairs(order)
    alpha_bound = BOUNDS.alpha ** order
    beta_bound = BOUNDS.beta ** order
    total = 1 << (order * (order - 1) // 2)

    tracked = {
        ("all", "phi"): [-1, []],
        ("all", "phi_max"): [-1, []],
        ("triangle-free", "phi"): [-1, []],
        ("triangle-free", "phi_max"): [-1, []],
    }
    eq_general: dict[str, list[int]] = {"phi": [], "phi_max": []}
    eq_tf: dict[str, list[int]] = {"phi": [], "phi_max": []}
    general_power = 10 ** (order // 5) if order % 5 == 0 else None
    tf_power = 6 ** (order // 4) if order % 4 == 0 else None
    scanned = 0

    for lo in range(0, total, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, total), dtype=np.uint64)
        tf_flags = _triangle_free_flags(order, masks)
        bip_flags = _bipartite_flags(order, masks)
        stray = bip_flags & ~tf_flags
        report.expect(
            not bool(stray.any()),
            "filter-soundness",
            f"order {order}: {int(stray.sum())} bipartite graphs flagged as having triangles",
        )
        for mask, is_tf in zip(masks.tolist(), tf_flags.tolist()):
            adj = _adjacency_of_mask(order, mask, pairs)
            family = maximal_masks(order, adj)
            phi = len(family)
            psi = max((m.bit_count() for m in family), default=0)
            phi_max = sum(1 for m in family if m.bit_count() == psi)
            scanned += 1

            if phi_max > phi:
                report.expect(
                    False,
                    "phi-max-le-phi",
                    f"order {order}: phi'={phi_max} > phi={phi}",
                    graph6=serialize_mask(order, mask),
                )
            if not _le(phi, alpha_bound):
                report.expect(
                    False,
                    "general-bound",
                    f"order {order}: phi={phi} > 10^(n/5)={alpha_bound:.6f}",
                    graph6=serialize_mask(order, mask),
                )
            if is_tf and not _le(phi, beta_bound):
                report.expect(
                    False,
                    "triangle-free-bound",
                    f"order {order}: triangle-free phi={phi} > 6^(n/4)={beta_bound:.6f}",
                    graph6=serialize_mask(order, mask),
                )

            for quantity, val in (("phi", phi), ("phi_max", phi_max)):
                slot = tracked[("all", quantity)]
                if val > slot[0]:
                    slot[0], slot[1] = val, [mask]
                elif val == slot[0]:
                    slot[1].append(mask)
                if is_tf:
                    slot = tracked[("triangle-free", quantity)]
                    if val > slot[0]:
                        slot[0], slot[1] = val, [mask]
                    elif val == slot[0]:
                        slot[1].append(mask)
                if general_power is not None and val == general_power:
                    eq_general[quantity].append(mask)
                if tf_power is not None and is_tf and val == tf_power:
                    eq_tf[quantity].append(mask)

    # the scan itself is one aggregate check per bound per order
    report.checks += 3
    records = []
    for (class_label, quantity), (best, wit) in tracked.items():
        classes = sorted({canonical_form(Graph.from_edge_mask(order, m)) for m in wit})
        records.append(
            {
                "order": order,
                "filter": class_label,
                "quantity": quantity,
                "max_value": best,
                "extremal_graph6": classes,
                "graphs_scanned": scanned,
            }
        )

    if general_power is not None:
        expected = _expected_general_equality_classes(order)
        for quantity in ("phi", "phi_max"):
            found = sorted(
                {canonical_form(Graph.from_edge_mask(order, m)) for m in eq_general[quantity]}
            )
            report.expect(
                set(found) == expected,
                "general-equality-classes",
                f"order {order} {quantity}: graphs attaining 10^(n/5) are {found}, "
                f"expected {sorted(expected)}",
            )
    if tf_power is not None:
        expected = _expected_triangle_free_equality_classes(order)
        for quantity in ("phi", "phi_max"):
            found = sorted(
                {canonical_form(Graph.from_edge_mask(order, m)) for m in eq_tf[quantity]}
            )
            report.expect(
                set(found) == expected,
                "triangle-free-equality-classes",
                f"order {order} {quantity}: triangle-free graphs attaining 6^(n/4) are "
                f"{found}, expected {sorted(expected)}",
            )
    if order == 8:
        found = next(
            r for r in records if r["filter"] == "all" and r["quantity"] == "phi"
        )
        report.expect(
            found["max_value"] == 36,
            "order8-maximum",
            f"order 8 unrestricted maximum is {found['max_value']}, expected 36",
        )
        report.expect(
            set(found["extremal_graph6"]) == _expected_order8_classes(),
            "order8-extremal-classes",
            f"order 8 extremal classes {found['extremal_graph6']} differ from the "
            f"two-block 4-clique family",
        )
    return records


def serialize_mask(order: int, mask: int) -> str:
    return serialize_graph6(Graph.from_edge_mask(order, mask))


def verify_asymptotic_bounds(
    order_max: int = 6,
    *,
    allow_long: bool = False,
    seed: int = 0,
    spot_orders: Iterable[int] = range(8, 15),
    spot_trials_per_order: int = 30,
    bipartite_spot_order: int = 12,
    bipartite_spot_trials: int = 200,
) -> VerificationReport:
    """Check phi <= 10^(n/5) and, for triangle-free graphs, phi <= 6^(n/4)
    on every labeled graph up to order_max, with equality exactly on the
    characterized families; phi' is held to the same bounds and to phi' <= phi.
    Orders 8..14 get randomized spot checks on top of the exhaustive range.
    """
    _check_sweep_order(order_max, allow_long)
    t0 = time.perf_counter()
    report = VerificationReport(suite="bounds")
    records = []
    for order in range(order_max + 1):
        records.extend(_scan_bounds_order(order, report))
    report.details["records"] = records

    rng = random.Random(seed)
    spot = 0
    for order in spot_orders:
        for trial in range(spot_trials_per_order):
            g = random_graph(rng, order, EDGE_PROBABILITIES[trial % 3])
            result = count(g)
            spot += 1
            ok = (
                result.phi_max <= result.phi
                and _le(result.phi, BOUNDS.alpha ** order)
                and (
                    not is_triangle_free(g.order, g.adj)
                    or _le(result.phi, BOUNDS.beta ** order)
                )
            )
            report.expect(
                ok,
                "spot-bound",
                f"random graph order {order} trial {trial}: phi={result.phi}, "
                f"phi'={result.phi_max} breaks a bound",
                graph6=serialize_graph6(g) if not ok else None,
            )
    for trial in range(bipartite_spot_trials):
        g = random_bipartite_graph(rng, bipartite_spot_order, EDGE_PROBABILITIES[trial % 3])
        result = count(g)
        spot += 1
        report.expect(
            _le(result.phi, BOUNDS.beta ** bipartite_spot_order),
            "bipartite-spot-bound",
            f"random bipartite graph order {bipartite_spot_order} trial {trial}: "
            f"phi={result.phi} > 6^(n/4)",
        )
    report.details["spot_checks"] = spot
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


# ---------------------------------------------------------------------------
# counting recurrences
# ---------------------------------------------------------------------------

def _phi(g: Graph) -> int:
    return len(maximal_masks(g.order, g.adj))


def _phi_minus(g: Graph, drop: Iterable[int]) -> int:
    return _phi(delete_vertices(g, drop))


def _check_pivot_recurrence(g: Graph, report: VerificationReport, g6: str) -> None:
    """Per-pivot partition bounds: each part of the split is dominated by the
    count of the matching vertex-deleted subgraph."""
    phi = _phi(g)
    for v in range(g.order):
        part = classify_by_pivot(g, v)
        closed = neighborhood(g, v, closed=True)
        open_nb = neighborhood(g, v)
        phi_without = _phi_minus(g, [v])
        phi_isolated = _phi_minus(g, closed)
        paired_sum = sum(_phi_minus(g, closed | neighborhood(g, u, closed=True)) for u in open_nb)

        report.expect(
            part.total == phi,
            "pivot-partition-total",
            f"{g6} v={v}: partition parts sum to {part.total}, phi={phi}",
            graph6=g6,
        )
        report.expect(
            part.excluded_count <= phi_without,
            "pivot-excluded-part",
            f"{g6} v={v}: excluded part {part.excluded_count} > phi(G-v)={phi_without}",
            graph6=g6,
        )
        report.expect(
            part.degree0_count <= phi_isolated,
            "pivot-degree0-part",
            f"{g6} v={v}: isolated part {part.degree0_count} > phi(G-N[v])={phi_isolated}",
            graph6=g6,
        )
        report.expect(
            part.degree1_count <= paired_sum,
            "pivot-degree1-part",
            f"{g6} v={v}: paired part {part.degree1_count} > sum over neighbours {paired_sum}",
            graph6=g6,
        )
        dominated = any(
            neighborhood(g, w, closed=True) <= closed for w in open_nb
        )
        if dominated:
            # some neighbour's closed neighbourhood sits inside N[v]: v can
            # never be isolated in a maximal set, and the middle term drops
            report.expect(
                part.degree0_count == 0,
                "pivot-dominated-degree0",
                f"{g6} v={v}: dominated pivot has isolated part {part.degree0_count}",
                graph6=g6,
            )
            report.expect(
                phi <= phi_without + paired_sum,
                "pivot-recurrence-strong",
                f"{g6} v={v}: phi={phi} > {phi_without} + {paired_sum}",
                graph6=g6,
            )
        report.expect(
            phi <= phi_without + phi_isolated + paired_sum,
            "pivot-recurrence",
            f"{g6} v={v}: phi={phi} > {phi_without + phi_isolated + paired_sum}",
            graph6=g6,
        )


def _check_leaf_recurrence(g: Graph, v: int, report: VerificationReport, g6: str) -> None:
    """Bound through a leaf v: branch on the status of its support vertex."""
    (w,) = neighborhood(g, v)
    closed_w = neighborhood(g, w, closed=True)
    rhs = (
        sum(
            _phi_minus(g, closed_w | neighborhood(g, u, closed=True))
            for u in neighborhood(g, w) - {v}
        )
        + _phi_minus(g, [v, w])
        + _phi_minus(g, closed_w)
    )
    report.expect(
        _phi(g) <= rhs,
        "leaf-recurrence",
        f"{g6} leaf v={v}: phi={_phi(g)} > {rhs}",
        graph6=g6,
    )


def _check_twin_leaf_recurrence(
    g: Graph, w: int, v1: int, v2: int, report: VerificationReport, g6: str
) -> None:
    """Bound at a vertex w supporting two leaves v1, v2."""
    closed_w = neighborhood(g, w, closed=True)
    rhs = (
        sum(
            _phi_minus(g, closed_w | neighborhood(g, u, closed=True))
            for u in neighborhood(g, w) - {v1}
        )
        + _phi_minus(g, [w, v1, v2])
        + _phi_minus(g, closed_w)
    )
    report.expect(
        _phi(g) <= rhs,
        "twin-leaf-recurrence",
        f"{g6} w={w} leaves {v1},{v2}: phi={_phi(g)} > {rhs}",
        graph6=g6,
    )


def verify_recurrences(
    pivot_trials: int = 200,
    leaf_trials: int = 100,
    twin_leaf_trials: int = 50,
    union_trials: int = 100,
    order_range: tuple[int, int] = (4, 10),
    seed: int = 0,
) -> VerificationReport:
    """Check the per-pivot, leaf, and twin-leaf counting recurrences on seeded
    random graphs, and multiplicativity of phi over disjoint unions."""
    t0 = time.perf_counter()
    report = VerificationReport(suite="recurrences")
    rng = random.Random(seed)
    lo, hi = order_range

    for trial in range(pivot_trials):
        g = random_graph(rng, rng.randint(lo, hi), EDGE_PROBABILITIES[trial % 3])
        _check_pivot_recurrence(g, report, serialize_graph6(g))

    for trial in range(leaf_trials):
        base = random_graph(rng, rng.randint(max(lo - 1, 2), hi - 1), EDGE_PROBABILITIES[trial % 3])
        w = rng.randrange(base.order)
        v = base.order
        g = Graph.from_edges(base.order + 1, list(base.edges()) + [(w, v)])
        _check_leaf_recurrence(g, v, report, serialize_graph6(g))

    for trial in range(twin_leaf_trials):
        base = random_graph(rng, rng.randint(max(lo - 2, 2), hi - 2), EDGE_PROBABILITIES[trial % 3])
        w = rng.randrange(base.order)
        v1, v2 = base.order, base.order + 1
        g = Graph.from_edges(base.order + 2, list(base.edges()) + [(w, v1), (w, v2)])
        _check_twin_leaf_recurrence(g, w, v1, v2, report, serialize_graph6(g))

    for trial in range(union_trials):
        a = random_graph(rng, rng.randint(1, 8), EDGE_PROBABILITIES[trial % 3])
        b = random_graph(rng, rng.randint(1, 8), EDGE_PROBABILITIES[(trial + 1) % 3])
        u = disjoint_union(a, b)
        report.expect(
            _phi(u) == _phi(a) * _phi(b),
            "union-multiplicativity",
            f"orders {a.order}+{b.order}: phi(union)={_phi(u)} != "
            f"{_phi(a)} * {_phi(b)}",
            graph6=serialize_graph6(u),
        )

    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


# ---------------------------------------------------------------------------
# path and cycle bounds
# ---------------------------------------------------------------------------

def verify_path_cycle_bounds(n_max: int = 20) -> VerificationReport:
    """phi(P_n) < 0.81 * 6^(n/4) for n up to n_max, and phi(C_n) <= 6^(n/4)
    with equality exactly at n = 4."""
    if n_max > 20:
        raise ValueError(f"path/cycle bound verification runs up to n=20, got {n_max}")
    t0 = time.perf_counter()
    report = VerificationReport(suite="paths-cycles")
    paths = []
    for n in range(1, n_max + 1):
        phi = count(path_graph(n)).phi
        bound = BOUNDS.path_coefficient * BOUNDS.beta ** n
        report.expect(
            _lt(phi, bound),
            "path-bound",
            f"phi(P_{n})={phi} is not strictly below 0.81 * 6^(n/4)={bound:.6f}",
        )
        paths.append({"n": n, "phi": phi})
    cycles = []
    for n in range(3, n_max + 1):
        phi = count(cycle_graph(n)).phi
        if n % 4 == 0:
            power = 6 ** (n // 4)
            if n == 4:
                report.expect(
                    phi == power,
                    "cycle-equality",
                    f"phi(C_4)={phi}, expected exactly {power}",
                )
            else:
                report.expect(
                    phi < power,
                    "cycle-bound",
                    f"phi(C_{n})={phi} is not strictly below 6^(n/4)={power}",
                )
        else:
            report.expect(
                _lt(phi, BOUNDS.beta ** n),
                "cycle-bound",
                f"phi(C_{n})={phi} is not strictly below 6^(n/4)={BOUNDS.beta ** n:.6f}",
            )
        cycles.append({"n": n, "phi": phi})
    report.details["paths"] = paths
    report.details["cycles"] = cycles
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report
