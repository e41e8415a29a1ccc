"""Canonical forms for tiny graphs by exhaustive permutation minimization.

The canonical form of a graph is the graph6 string of the relabelling whose
upper-triangle bit string is lexicographically minimal over all order!
permutations.  Two graphs of order <= 8 are isomorphic exactly when
their canonical forms are equal.  The factorial scan is deliberate: at these
orders it is cheap, trivially correct, and needs no refinement machinery.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .graph6 import serialize_graph6
from .graphs import Graph, UnsupportedSizeError, edge_pairs

CANONICAL_ORDER_CAP = 8


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def _min_bits(g: Graph) -> int:
    """Minimal packed upper-triangle bits over all relabellings (MSB = first pair)."""
    adj = g.adj
    n = g.order
    pairs = edge_pairs(n)
    best = None
    for perm in _perms(n):
        val = 0
        for i, j in pairs:
            val = (val << 1) | ((adj[perm[i]] >> perm[j]) & 1)
        if best is None or val < best:
            best = val
    return best or 0


def canonical_form(g: Graph) -> str:
    """graph6 string of the lexicographically minimal relabelling of g."""
    if g.order > CANONICAL_ORDER_CAP:
        raise UnsupportedSizeError(
            f"canonical_form is capped at order {CANONICAL_ORDER_CAP} "
            f"(factorial scan), got {g.order}"
        )
    bits = _min_bits(g)
    nbits = g.order * (g.order - 1) // 2
    # repack MSB-first bit string into the from_edge_mask bit numbering
    mask = 0
    for k in range(nbits):
        if (bits >> (nbits - 1 - k)) & 1:
            mask |= 1 << k
    return serialize_graph6(Graph.from_edge_mask(g.order, mask))
