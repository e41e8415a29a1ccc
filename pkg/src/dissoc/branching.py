"""Branching enumerator for maximal dissociation sets.

The recursion partitions the target family by the status of a pivot vertex v
of maximum residual degree: either v is excluded, or v is in the set with no
neighbour beside it, or v is in the set next to exactly one neighbour u.  The
three shapes recurse on G-v, G-N[v] and G-(N[v] u N[u]) respectively.  Once
the residual graph has maximum degree <= 1 it is swallowed whole.  Leaf
candidates may be non-maximal in the original graph or duplicated across
branches; a final maximality filter plus deduplication restores exactness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, check_enumeration_order
from .oracle import DissociationFamily, _members


def candidate_masks(order: int, adj: Sequence[int]) -> list[int]:
    """Raw recursion leaves: dissociation sets covering every maximal one."""
    out: list[int] = []
    app = out.append

    def rec(rmask: int, partial: int) -> None:
        best_v = -1
        best_d = 1
        m = rmask
        while m:
            vb = m & -m
            m ^= vb
            v = vb.bit_length() - 1
            d = (adj[v] & rmask).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        if best_v < 0:
            # residual max degree <= 1: isolated vertices and lone edges all go in
            app(partial | rmask)
            return
        vb = 1 << best_v
        nv = adj[best_v] & rmask
        rec(rmask & ~vb, partial)
        rec(rmask & ~(nv | vb), partial | vb)
        m = nv
        while m:
            ub = m & -m
            m ^= ub
            nu = adj[ub.bit_length() - 1] & rmask
            rec(rmask & ~(nv | nu | vb | ub), partial | vb | ub)

    rec((1 << order) - 1, 0)
    return out


def maximal_masks(order: int, adj: Sequence[int]) -> list[int]:
    """All maximal dissociation sets as bitmasks, deduplicated, ascending.

    Low-level entry point used by the exhaustive sweeps; `enumerate_maximal`
    wraps the result in a DissociationFamily.
    """
    full = (1 << order) - 1
    keep = set()
    for f in candidate_masks(order, adj):
        rest = full & ~f
        ok = True
        while rest:
            wb = rest & -rest
            rest ^= wb
            t = adj[wb.bit_length() - 1] & f
            if t == 0 or (t & (t - 1) == 0 and adj[t.bit_length() - 1] & f == 0):
                ok = False
                break
        if ok:
            keep.add(f)
    return sorted(keep)


@dataclass(frozen=True)
class PivotPartition:
    """Counts of maximal dissociation sets by the status of one pivot vertex."""

    excluded_count: int
    degree0_count: int
    degree1_count: int

    @property
    def total(self) -> int:
        return self.excluded_count + self.degree0_count + self.degree1_count


@dataclass(frozen=True)
class CountResult:
    phi: int          # number of maximal dissociation sets
    phi_max: int      # number of maximum dissociation sets
    psi: int          # dissociation number (size of a maximum set)
    elapsed: float    # seconds

    def as_dict(self) -> dict:
        return {"phi": self.phi, "phi_max": self.phi_max, "psi": self.psi}


def enumerate_maximal(g: Graph) -> DissociationFamily:
    """Exactly the maximal dissociation sets of g, in canonical family order."""
    check_enumeration_order(g.order)
    return DissociationFamily.from_masks(g.order, maximal_masks(g.order, g.adj))


def count(g: Graph) -> CountResult:
    """phi / phi_max / psi of g via the branching enumerator."""
    check_enumeration_order(g.order)
    t0 = time.perf_counter()
    masks = maximal_masks(g.order, g.adj)
    psi = max((m.bit_count() for m in masks), default=0)
    phi_max = sum(1 for m in masks if m.bit_count() == psi)
    return CountResult(len(masks), phi_max, psi, time.perf_counter() - t0)


def classify_by_pivot(g: Graph, v: int) -> PivotPartition:
    """Split the maximal dissociation sets by whether v is absent, isolated
    inside the set, or paired with one neighbour inside the set."""
    check_enumeration_order(g.order)
    if not 0 <= v < g.order:
        raise IndexError(f"vertex {v} out of range for order {g.order}")
    excluded = degree0 = degree1 = 0
    vb = 1 << v
    for m in maximal_masks(g.order, g.adj):
        if not m & vb:
            excluded += 1
        elif g.adj[v] & m:
            degree1 += 1
        else:
            degree0 += 1
    return PivotPartition(excluded, degree0, degree1)


def _lex_less(a: int, b: int) -> bool:
    """Sorted-member-list lexicographic order for equal-size vertex sets."""
    d = a ^ b
    if d == 0:
        return False
    return bool(a & (d & -d))


def maximum_dissociation_set(g: Graph) -> set[int]:
    """The lexicographically least dissociation set of maximum size.

    Reuses the branching recursion, pruning branches whose partial set plus
    entire residual cannot reach the incumbent size.
    """
    check_enumeration_order(g.order)
    adj = g.adj
    best_size = -1
    best_mask = 0

    def rec(rmask: int, partial: int) -> None:
        nonlocal best_size, best_mask
        if partial.bit_count() + rmask.bit_count() < best_size:
            return
        best_v = -1
        best_d = 1
        m = rmask
        while m:
            vb = m & -m
            m ^= vb
            v = vb.bit_length() - 1
            d = (adj[v] & rmask).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        if best_v < 0:
            cand = partial | rmask
            size = cand.bit_count()
            if size > best_size or (size == best_size and _lex_less(cand, best_mask)):
                best_size = size
                best_mask = cand
            return
        vb = 1 << best_v
        nv = adj[best_v] & rmask
        rec(rmask & ~vb, partial)
        rec(rmask & ~(nv | vb), partial | vb)
        m = nv
        while m:
            ub = m & -m
            m ^= ub
            nu = adj[ub.bit_length() - 1] & rmask
            rec(rmask & ~(nv | nu | vb | ub), partial | vb | ub)

    rec((1 << g.order) - 1, 0)
    return set(_members(best_mask))
