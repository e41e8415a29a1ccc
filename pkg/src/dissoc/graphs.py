"""Small-graph core: bitmask adjacency, named graph families, vertex deletion.

Graphs are immutable and live on vertex indices 0..order-1.  Adjacency is
stored as one bitmask per vertex (bit j of ``adj[i]`` set iff ij is an edge),
which keeps neighbourhood algebra down to integer bit operations.  All
counting and enumeration entry points cap the order at
``ENUMERATION_ORDER_CAP``; the graph type itself supports anything the graph6
short form can express (order <= 62).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

ENUMERATION_ORDER_CAP = 32


class UnsupportedSizeError(ValueError):
    """The graph is too large for the requested operation."""


class FamilySpecError(ValueError):
    """Family parameters violate a construction constraint."""


def edge_index(i: int, j: int) -> int:
    """Position of the pair {i, j} (i < j) in column-major upper-triangle order.

    The ordering is (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... -- the same
    bit order the graph6 format uses.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_pairs(order: int) -> list[tuple[int, int]]:
    """All vertex pairs of an `order`-vertex graph in column-major order."""
    return [(i, j) for j in range(1, order) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitmask adjacency rows."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 0:
            raise ValueError("graph order must be nonnegative")
        if len(self.adj) != n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for order {n}")
        for i, row in enumerate(self.adj):
            if row >> n:
                raise ValueError(f"adjacency row {i} references vertices >= {n}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(n):
            m = self.adj[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * order
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < order and 0 <= j < order):
                raise ValueError(f"edge ({i},{j}) outside vertex range 0..{order - 1}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(order, tuple(adj))

    @classmethod
    def from_edge_mask(cls, order: int, mask: int) -> "Graph":
        """Build from a column-major upper-triangle edge bitmask."""
        nbits = order * (order - 1) // 2
        if mask >> nbits:
            raise ValueError(f"edge mask has bits beyond the {nbits} vertex pairs")
        pairs = edge_pairs(order)
        adj = [0] * order
        while mask:
            k = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(order, tuple(adj))

    def edge_mask(self) -> int:
        """Column-major upper-triangle edge bitmask (inverse of from_edge_mask)."""
        mask = 0
        for k, (i, j) in enumerate(edge_pairs(self.order)):
            if (self.adj[i] >> j) & 1:
                mask |= 1 << k
        return mask

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.order):
            m = self.adj[i] >> (i + 1)
            while m:
                j = (m & -m).bit_length() + i
                m &= m - 1
                yield (i, j)

    def component_count(self) -> int:
        seen = 0
        full = (1 << self.order) - 1
        parts = 0
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            frontier = start
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
            seen |= comp
            parts += 1
        return parts

    def is_connected(self) -> bool:
        return self.order <= 1 or self.component_count() == 1


def neighborhood(g: Graph, v: int, closed: bool = False) -> set[int]:
    """Open neighbourhood N(v), or closed neighbourhood N[v] = N(v) + {v}."""
    if not 0 <= v < g.order:
        raise IndexError(f"vertex {v} out of range for order {g.order}")
    m = g.adj[v]
    out = set()
    while m:
        out.add((m & -m).bit_length() - 1)
        m &= m - 1
    if closed:
        out.add(v)
    return out


def delete_vertices_mapped(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the complement of `vertices`, plus the index map.

    Surviving vertices are relabelled 0..k-1 preserving their original
    relative order; the returned tuple maps new index -> original vertex.
    """
    drop = 0
    for v in vertices:
        if not 0 <= v < g.order:
            raise IndexError(f"vertex {v} out of range for order {g.order}")
        drop |= 1 << v
    kept = tuple(v for v in range(g.order) if not (drop >> v) & 1)
    relabel = {old: new for new, old in enumerate(kept)}
    adj = [0] * len(kept)
    for new, old in enumerate(kept):
        m = g.adj[old] & ~drop
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            adj[new] |= 1 << relabel[w]
    return Graph(len(kept), tuple(adj)), kept


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """G - S: the induced subgraph on V minus `vertices`, compactly relabelled."""
    return delete_vertices_mapped(g, vertices)[0]


# Named families.  Vertex labelling conventions: paths/cycles run 0-1-2-...,
# complete bipartite puts the m-side first, k_star deletes the matching
# {0-1, 2-3, ...}, and disjoint unions concatenate vertex ranges left to right.

def path_graph(n: int) -> Graph:
    if n < 1:
        raise FamilySpecError(f"path requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilySpecError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise FamilySpecError(f"complete requires n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise FamilySpecError(f"complete_bipartite requires both parts >= 1, got {m},{n}")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def k_star_graph(m: int, i: int) -> Graph:
    """K_m with the first i matching edges {0-1, 2-3, ...} deleted.

    Any deletion of i pairwise non-adjacent edges from K_m gives an isomorphic
    graph, so the lexicographically first matching stands for the class.
    """
    if m < 1:
        raise FamilySpecError(f"k_star requires m >= 1, got {m}")
    if not 0 <= i <= m // 2:
        raise FamilySpecError(
            f"k_star deleted edges must form a matching: need 0 <= i <= {m // 2}, got {i}"
        )
    removed = {(2 * k, 2 * k + 1) for k in range(i)}
    return Graph.from_edges(m, (e for e in combinations(range(m), 2) if e not in removed))


def disjoint_union(*graphs: Graph) -> Graph:
    order = sum(g.order for g in graphs)
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.order
    return Graph(order, tuple(adj))


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a named graph family.

    kind is one of path/cycle/complete/complete_bipartite/k_star with integer
    args, or disjoint_union with nested parts.
    """

    kind: str
    args: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls("cycle", (n,))

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls("complete", (n,))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "FamilySpec":
        return cls("complete_bipartite", (m, n))

    @classmethod
    def k_star(cls, m: int, i: int) -> "FamilySpec":
        return cls("k_star", (m, i))

    @classmethod
    def disjoint_union(cls, *parts: "FamilySpec") -> "FamilySpec":
        return cls("disjoint_union", (), tuple(parts))

    def label(self) -> str:
        if self.kind == "disjoint_union":
            return " + ".join(p.label() for p in self.parts)
        return f"{self.kind}({','.join(map(str, self.args))})"


_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "k_star": k_star_graph,
}


def build(spec: FamilySpec) -> Graph:
    """Materialize a FamilySpec as a labelled graph."""
    if spec.kind == "disjoint_union":
        return disjoint_union(*(build(p) for p in spec.parts))
    builder = _BUILDERS.get(spec.kind)
    if builder is None:
        raise FamilySpecError(f"unknown family kind {spec.kind!r}")
    try:
        return builder(*spec.args)
    except TypeError as exc:
        raise FamilySpecError(f"bad arguments for {spec.kind}: {spec.args}") from exc


def check_enumeration_order(order: int) -> None:
    """Reject graphs beyond the enumeration cap."""
    if order > ENUMERATION_ORDER_CAP:
        raise UnsupportedSizeError(
            f"order {order} exceeds the enumeration cap of {ENUMERATION_ORDER_CAP}"
        )
