"""Immutable simple undirected graphs on at most 64 vertices.

A graph is stored as one integer bit-row per vertex: bit ``v`` of ``rows[u]``
is set iff ``u`` and ``v`` are adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphError

MAX_VERTICES = 64


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> "Graph":
        rows = tuple(int(r) for r in rows)
        g = cls(len(rows), rows)
        if check:
            g.validate()
        return g

    def validate(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
        if len(self.rows) != n:
            raise GraphError("row count does not match n")
        full = (1 << n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {u} references a vertex >= {n}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            w = row
            while w:
                low = w & -w
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                w ^= low

    # -- basic queries -------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def irregularity(self) -> int:
        """Maximum degree minus minimum degree."""
        d = self.degrees()
        return max(d) - min(d)

    @property
    def is_regular(self) -> bool:
        return self.irregularity == 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        n = self.n
        for u in range(n):
            missing = ~self.rows[u] & ((1 << n) - 1)
            for v in iter_bits(missing >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def adjacency(self, dtype=np.float64) -> np.ndarray:
        n = self.n
        a = np.zeros((n, n), dtype=dtype)
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                a[u, v] = 1
        return a

    # -- value-returning edits --------------------------------------------

    def with_edges(self, add: Iterable[tuple[int, int]] = (),
                   remove: Iterable[tuple[int, int]] = ()) -> "Graph":
        rows = list(self.rows)
        for u, v in remove:
            _check_pair(self.n, u, v)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            _check_pair(self.n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabeling is not a permutation")
        rows = [0] * n
        for u, row in enumerate(self.rows):
            r = 0
            for v in iter_bits(row):
                r |= 1 << perm[v]
            rows[perm[u]] = r
        return Graph(n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in iter_bits(self.rows[v]):
                if w in index:
                    r |= 1 << index[w]
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def __repr__(self) -> str:
        from .graph6 import to_graph6
        return f"Graph(n={self.n}, e={self.edge_count}, g6={to_graph6(self)!r})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices; repeated edges collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return make_graph(n)


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def rows_connected(rows: Sequence[int]) -> bool:
    n = len(rows)
    full = (1 << n) - 1
    comp = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == full


def is_connected(g: Graph) -> bool:
    return rows_connected(g.rows)


def _ensure_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphError(f"result would have {n} > {MAX_VERTICES} vertices")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _ensure_size(n)
    shift = g.n
    return Graph(n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    n = g.n + h.n
    _ensure_size(n)
    shift = g.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << shift
    rows = tuple(r | h_mask for r in g.rows) + tuple((r << shift) | g_mask for r in h.rows)
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(~r & full & ~(1 << v) for v, r in enumerate(g.rows)))
