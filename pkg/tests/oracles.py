"""Independent reference computations used by the tests.

* ``polya_connected_counts``: unlabeled connected graph counts by (n, e) from
  the cycle index of the symmetric group acting on vertex pairs, followed by
  an inverse Euler transform. Shares no code with the package.
* ``labeled_filter_counts``: every labeled graph on n <= 7 vertices, filtered
  to connected graphs with a non-increasing degree sequence (every class has
  such a labelling), then bucketed by canonical form.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

import numpy as np


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _poly_mul(a, b):
    out = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def polya_all_counts(n: int) -> tuple[int, ...]:
    """Number of unlabeled graphs on n vertices with e edges, e = 0..C(n,2)."""
    total = defaultdict(Fraction)
    for lam in _partitions(n):
        mult = Counter(lam)
        size = factorial(n)
        for k, m in mult.items():
            size //= k ** m * factorial(m)
        # cycle lengths of the induced permutation on pairs
        cycles = []
        for k in lam:
            cycles += [k] * ((k - 1) // 2)
            if k % 2 == 0:
                cycles.append(k // 2)
        for a, b in itertools.combinations(range(len(lam)), 2):
            la, lb = lam[a], lam[b]
            g = gcd(la, lb)
            cycles += [la * lb // g] * g
        poly = {0: 1}
        for c in cycles:
            poly = _poly_mul(poly, {0: 1, c: 1})
        for e, v in poly.items():
            total[e] += Fraction(size * v, factorial(n))
    out = [total[e] for e in range(comb(n, 2) + 1)]
    assert all(x.denominator == 1 for x in out)
    return tuple(int(x) for x in out)


def polya_connected_counts(n_max: int) -> dict[tuple[int, int], int]:
    """Connected unlabeled graph counts c(n, e) for 1 <= n <= n_max."""
    conn: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        # series in (vertices, edges) of graphs whose components all have < n vertices
        series = {(0, 0): 1}
        for (m, f), c in conn.items():
            if c == 0:
                continue
            factor = {}
            j = 0
            while m * j <= n:
                factor[(m * j, f * j)] = comb(c + j - 1, j)
                j += 1
            new = defaultdict(int)
            for (a, b), x in series.items():
                for (p, q), y in factor.items():
                    if a + p <= n:
                        new[(a + p, b + q)] += x * y
            series = new
        allc = polya_all_counts(n)
        for e in range(comb(n, 2) + 1):
            conn[(n, e)] = allc[e] - series.get((n, e), 0)
    return conn


def labeled_filter_counts(n: int) -> dict[int, int]:
    """Connected isomorphism classes per edge count by brute force over labeled graphs."""
    from spectramin.canonical import canonical_key
    from spectramin.graph import rows_connected

    assert n <= 7, "labeled filter is only feasible for n <= 7"
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.int64)
    deg = np.zeros((1 << m, n), dtype=np.int8)
    for i, (a, b) in enumerate(pairs):
        bit = ((masks >> i) & 1).astype(np.int8)
        deg[:, a] += bit
        deg[:, b] += bit
    ok = np.all(deg[:, :-1] >= deg[:, 1:], axis=1) & np.all(deg > 0, axis=1) if n > 1 else \
        np.ones(1 << m, dtype=bool)
    classes: dict[int, set] = defaultdict(set)
    for mask in masks[ok]:
        rows = [0] * n
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        if rows_connected(rows):
            classes[int(mask).bit_count()].add(canonical_key(rows))
    return {e: len(v) for e, v in classes.items()}
