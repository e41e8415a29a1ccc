"""Brute-force ground truth for dissociation sets.

A dissociation set is a vertex subset whose induced subgraph has maximum
degree at most one.  Everything here scans all 2^n subsets and tests
maximality by explicit single-vertex extension -- intentionally naive, so the
fast enumerator has an independent referee.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, UnsupportedSizeError

ORACLE_ORDER_CAP = 24
DEFAULT_TIME_LIMIT = 60.0


class OracleTimeoutError(RuntimeError):
    """The subset scan exceeded its wall-clock budget; no partial answer is returned."""


def _mask_of(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.order:
            raise IndexError(f"vertex {v} out of range for order {g.order}")
        mask |= 1 << v
    return mask


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def _is_dissociation_mask(adj: Sequence[int], f: int) -> bool:
    m = f
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if (adj[v] & f).bit_count() > 1:
            return False
    return True


def is_dissociation(g: Graph, f: Iterable[int]) -> bool:
    """True iff every vertex of f has at most one neighbour inside f."""
    return _is_dissociation_mask(g.adj, _mask_of(g, f))


def is_maximal(g: Graph, f: Iterable[int]) -> bool:
    """True iff no single vertex can be added to the dissociation set f.

    Raises ValueError when f is not a dissociation set of g.
    """
    fm = _mask_of(g, f)
    if not _is_dissociation_mask(g.adj, fm):
        raise ValueError("is_maximal requires a dissociation set")
    for w in range(g.order):
        if not (fm >> w) & 1 and _is_dissociation_mask(g.adj, fm | (1 << w)):
            return False
    return True


@dataclass(frozen=True)
class DissociationFamily:
    """All maximal dissociation sets of one graph, deduplicated and in
    canonical order: by size, then lexicographically by sorted member list."""

    source_order: int
    sets: tuple[frozenset[int], ...]

    @classmethod
    def from_masks(cls, order: int, masks: Iterable[int]) -> "DissociationFamily":
        keyed = sorted({m for m in masks}, key=lambda m: (m.bit_count(), _members(m)))
        return cls(order, tuple(frozenset(_members(m)) for m in keyed))

    def masks(self) -> list[int]:
        out = []
        for s in self.sets:
            m = 0
            for v in s:
                m |= 1 << v
            out.append(m)
        return out

    def as_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def __contains__(self, item: Iterable[int]) -> bool:
        return frozenset(item) in set(self.sets)


def _check_cap(g: Graph) -> None:
    if g.order > ORACLE_ORDER_CAP:
        raise UnsupportedSizeError(
            f"brute-force oracle is capped at order {ORACLE_ORDER_CAP}, got {g.order}"
        )


def _scan_dissociation_masks(g: Graph, time_limit: float) -> Iterator[int]:
    """Yield all dissociation-set masks in increasing bitmask order."""
    adj = g.adj
    deadline = time.monotonic() + time_limit
    for f in range(1 << g.order):
        if f & 0xFFF == 0 and time.monotonic() > deadline:
            raise OracleTimeoutError(
                f"oracle subset scan exceeded {time_limit:.1f}s at order {g.order}"
            )
        if _is_dissociation_mask(adj, f):
            yield f


def enumerate_maximal_bruteforce(
    g: Graph, time_limit: float = DEFAULT_TIME_LIMIT
) -> DissociationFamily:
    """Every maximal dissociation set of g, by scanning all 2^n subsets."""
    _check_cap(g)
    adj = g.adj
    out = []
    for f in _scan_dissociation_masks(g, time_limit):
        maximal = True
        for w in range(g.order):
            if not (f >> w) & 1 and _is_dissociation_mask(adj, f | (1 << w)):
                maximal = False
                break
        if maximal:
            out.append(f)
    return DissociationFamily.from_masks(g.order, out)


def dissociation_number(g: Graph, time_limit: float = DEFAULT_TIME_LIMIT) -> int:
    """Largest size of a dissociation set of g."""
    _check_cap(g)
    best = 0
    for f in _scan_dissociation_masks(g, time_limit):
        c = f.bit_count()
        if c > best:
            best = c
    return best


def count_maximum_bruteforce(g: Graph, time_limit: float = DEFAULT_TIME_LIMIT) -> int:
    """Number of dissociation sets of maximum size."""
    _check_cap(g)
    best = 0
    count = 0
    for f in _scan_dissociation_masks(g, time_limit):
        c = f.bit_count()
        if c > best:
            best = c
            count = 1
        elif c == best:
            count += 1
    return count
