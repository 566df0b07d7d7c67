"""Exact canonical forms for small graphs.

Vertices are first split by an equitable (colour) refinement. When the
refined partition is not discrete, the first non-singleton cell is
individualized vertex by vertex and the search recurses; each leaf yields a
relabeling and the smallest relabeled row tuple is the canonical key. Two
vertices with identical neighbourhoods outside each other are interchangeable
by an automorphism that fixes the current search node, so only one of them is
tried per node.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError
from .graph import Graph

MAX_CANONICAL_VERTICES = 16


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Permutation-invariant key; equal keys iff the graphs are isomorphic."""
    n: int
    rows: tuple[int, ...]

    def graph(self) -> Graph:
        return Graph(self.n, self.rows)

    def graph6(self) -> str:
        from .graph6 import to_graph6
        return to_graph6(self.graph())


def _refine(rows: Sequence[int], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Split ``cells`` until every cell is uniform against every splitter.

    Fragments are ordered by neighbour count into the splitter, which keeps
    the result independent of vertex labels.
    """
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            first = (rows[cell[0]] & w).bit_count()
            counts = None
            for idx in range(1, len(cell)):
                if (rows[cell[idx]] & w).bit_count() != first:
                    counts = [(rows[v] & w).bit_count() for v in cell]
                    break
            if counts is None:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                m = 0
                for v in frag:
                    m |= 1 << v
                queue.append(m)
            changed = True
        if changed:
            cells = out
            if len(cells) == len(rows):
                break
    return cells


def _leaf_key(rows: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(rows)
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for v in order:
        r = rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << pos[low.bit_length() - 1]
            r ^= low
        key.append(nr)
    return tuple(key)


def _search(rows: Sequence[int], cells: list[list[int]], best: list) -> None:
    target = -1
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            target = i
            break
    if target < 0:
        key = _leaf_key(rows, [c[0] for c in cells])
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = [c[0] for c in cells]
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        rv = rows[v]
        twin = False
        for u in tried:
            if (rv ^ rows[u]) & ~((1 << u) | (1 << v)) == 0:
                twin = True
                break
        if twin:
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        new_cells = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(rows, _refine(rows, new_cells, [1 << v]), best)


def canonical_rows(rows: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(key, order)``: the canonical row tuple and the vertex order
    (position -> original vertex) that produces it."""
    n = len(rows)
    if n == 1:
        return (0,), [0]
    cells = _refine(rows, [list(range(n))], [(1 << n) - 1])
    best: list = [None, None]
    _search(rows, cells, best)
    return best[0], best[1]


def canonical_key(rows: Sequence[int]) -> tuple[int, ...]:
    return canonical_rows(rows)[0]


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_CANONICAL_VERTICES:
        raise GraphError(f"exact canonicalization supports n <= {MAX_CANONICAL_VERTICES}, got {g.n}")
    return CanonicalForm(g.n, canonical_key(g.rows))


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).graph6()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
