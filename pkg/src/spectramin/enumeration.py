"""Isomorph-free generation of connected graphs with a given order and size.

Sparse sizes grow connected graphs one edge at a time starting from the
trees; dense sizes grow the (not necessarily connected) complements from the
empty graph and keep those whose complement is connected. A child is only
canonicalized when the edge just added could be its canonical deletion edge:
an edge whose label-invariant key (degree sum, common neighbours, smaller
degree) is maximal among the child's deletable edges. Every isomorphism class
is still reached from its canonical parent, and the per-level set of
canonical keys removes the remaining duplicates.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Iterator, Sequence

from .canonical import canonical_key
from .errors import GraphError
from .graph import Graph, rows_connected

log = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 10

Key = tuple[int, ...]

# n -> list of levels; level k holds sorted canonical keys
_tree_cache: dict[int, list[Key]] = {}
_connected_levels: dict[int, dict[int, list[Key]]] = {}
_all_levels: dict[int, dict[int, list[Key]]] = {}


def _edge_key(rows: Sequence[int], deg: Sequence[int], a: int, b: int) -> int:
    da, db = deg[a], deg[b]
    return ((da + db) << 12) | ((rows[a] & rows[b]).bit_count() << 6) | min(da, db)


def _is_bridge(rows: list[int], a: int, b: int) -> bool:
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    comp = frontier = 1 << a
    target = 1 << b
    found = False
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~comp
        if frontier & target:
            found = True
            break
        comp |= frontier
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return not found


def _may_be_canonical_deletion(rows: list[int], deg: list[int], u: int, v: int,
                               keep_connected: bool) -> bool:
    k0 = _edge_key(rows, deg, u, v)
    threshold = deg[u] + deg[v]
    n = len(rows)
    # an edge beating the threshold has an endpoint of degree >= threshold / 2
    for a in range(n):
        if 2 * deg[a] < threshold:
            continue
        r = rows[a]
        while r:
            low = r & -r
            b = low.bit_length() - 1
            r ^= low
            if deg[a] + deg[b] < threshold:
                continue
            if _edge_key(rows, deg, a, b) > k0:
                if not keep_connected or not _is_bridge(rows, a, b):
                    return False
    return True


def _expand(parents: Sequence[Key], keep_connected: bool) -> set[Key]:
    children: set[Key] = set()
    for parent in parents:
        n = len(parent)
        rows = list(parent)
        deg = [r.bit_count() for r in rows]
        for u in range(n):
            missing = ~rows[u] & ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
            while missing:
                low = missing & -missing
                v = low.bit_length() - 1
                missing ^= low
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                if _may_be_canonical_deletion(rows, deg, u, v, keep_connected):
                    children.add(canonical_key(rows))
                rows[u] ^= 1 << v
                rows[v] ^= 1 << u
                deg[u] -= 1
                deg[v] -= 1
    return children


def _expand_level(parents: list[Key], keep_connected: bool, workers: int) -> list[Key]:
    if workers <= 1 or len(parents) < 64:
        return sorted(_expand(parents, keep_connected))
    chunk = -(-len(parents) // (workers * 4))
    parts = [parents[i:i + chunk] for i in range(0, len(parents), chunk)]
    out: set[Key] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for res in pool.map(_expand, parts, [keep_connected] * len(parts)):
            out |= res
    return sorted(out)


def trees(n: int) -> list[Key]:
    """Canonical keys of all trees on ``n`` vertices, grown leaf by leaf."""
    if n in _tree_cache:
        return _tree_cache[n]
    if n == 1:
        level = [(0,)]
    else:
        found = set()
        for t in trees(n - 1):
            for v in range(n - 1):
                rows = list(t) + [1 << v]
                rows[v] |= 1 << (n - 1)
                found.add(canonical_key(rows))
        level = sorted(found)
    _tree_cache[n] = level
    return level


def connected_level(n: int, e: int, workers: int = 1) -> list[Key]:
    """Sorted canonical keys of connected (n, e)-graphs, grown from trees."""
    levels = _connected_levels.setdefault(n, {})
    if e in levels:
        return levels[e]
    if e == n - 1:
        levels[e] = trees(n)
        return levels[e]
    prev = connected_level(n, e - 1, workers)
    log.debug("expanding connected n=%d e=%d from %d parents", n, e - 1, len(prev))
    levels[e] = _expand_level(prev, True, workers)
    return levels[e]


def all_level(n: int, k: int, workers: int = 1) -> list[Key]:
    """Sorted canonical keys of all graphs on ``n`` vertices with ``k`` edges."""
    levels = _all_levels.setdefault(n, {})
    if k in levels:
        return levels[k]
    if k == 0:
        levels[0] = [(0,) * n]
        return levels[0]
    prev = all_level(n, k - 1, workers)
    log.debug("expanding all-graphs n=%d k=%d from %d parents", n, k - 1, len(prev))
    levels[k] = _expand_level(prev, False, workers)
    return levels[k]


def clear_cache() -> None:
    _tree_cache.clear()
    _connected_levels.clear()
    _all_levels.clear()


def _check_range(n: int, e: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_VERTICES}, got n={n}")
    if not n - 1 <= e <= comb(n, 2):
        raise GraphError(f"no connected graphs with n={n}, e={e}: need {n - 1} <= e <= {comb(n, 2)}")


def uses_complements(n: int, e: int) -> bool:
    return 2 * e > comb(n, 2)


def connected_keys(n: int, e: int, workers: int = 1) -> list[Key]:
    """Row tuples, one per isomorphism class of connected (n, e)-graphs.

    On the sparse side these are canonical keys; on the dense side they are
    complements of canonical keys of the complement graphs.
    """
    _check_range(n, e)
    if not uses_complements(n, e):
        return connected_level(n, e, workers)
    full = (1 << n) - 1
    out = []
    for key in all_level(n, comb(n, 2) - e, workers):
        rows = tuple(~r & full & ~(1 << v) for v, r in enumerate(key))
        if rows_connected(rows):
            out.append(rows)
    return out


def enumerate_connected(n: int, e: int, workers: int = 1) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of connected (n, e)-graphs.

    The order is deterministic for fixed (n, e).
    """
    for rows in connected_keys(n, e, workers):
        yield Graph(n, rows)


def count_connected(n: int, e: int, workers: int = 1) -> int:
    return len(connected_keys(n, e, workers))
