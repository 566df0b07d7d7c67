"""Spectral radius, characteristic polynomials, quotient matrices and p-means."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import polynomial
from .canonical import _refine
from .errors import ConvergenceError, GraphError, InconsistencyError
from .graph import Graph, is_connected, iter_bits

DEFAULT_TOL = 1e-12
MAX_ITER = 10**6


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    eigenvector: np.ndarray = field(repr=False)
    residual: float
    iterations: int

    @property
    def error_bound(self) -> float:
        """Some eigenvalue lies within this distance of ``rho`` (Rayleigh bound)."""
        return float(self.residual * math.sqrt(len(self.eigenvector)))


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER,
                    require_connected: bool = True) -> SpectralResult:
    """Largest adjacency eigenvalue and its unit positive eigenvector.

    Power iteration on ``A + I``: the shift makes the Perron value strictly
    dominant in modulus, so the iteration converges for every connected graph.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if require_connected and not is_connected(g):
        raise GraphError("spectral_radius needs a connected graph for a positive eigenvector")
    n = g.n
    a = g.adjacency()
    x = np.full(n, 1.0 / math.sqrt(n))
    if g.edge_count == 0:
        return SpectralResult(0.0, x, 0.0, 0)
    rho = 0.0
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            return SpectralResult(rho, x, residual, it)
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps (residual {residual:.3g})")


def spectral_radius_value(g: Graph) -> float:
    """Fast dense-eigensolver value, used for bulk screening."""
    if g.edge_count == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency())[-1])


def batch_spectral_radii(rows_list: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """Largest eigenvalue for many graphs on ``n`` vertices at once."""
    m = len(rows_list)
    if m == 0:
        return np.zeros(0)
    bits = np.array(rows_list, dtype=np.int64).reshape(m, n, 1)
    a = ((bits >> np.arange(n, dtype=np.int64)) & 1).astype(np.float64)
    return np.linalg.eigvalsh(a)[:, -1]


# -- characteristic polynomial ---------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Exact integer coefficients of det(xI - A), highest degree first."""
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return polynomial.evaluate(self.coefficients, x)

    def largest_real_root(self) -> float:
        return polynomial.largest_real_root(self.coefficients)

    def largest_root_mp(self, approx: float | None = None, dps: int = 60):
        if approx is None:
            return polynomial.largest_root_mp(self.coefficients, dps)
        return polynomial.simple_root_mp(self.coefficients, approx, dps=dps)

    def __str__(self) -> str:
        d = self.degree
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            p = d - i
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            if abs(c) == 1 and p:
                coef = "-" if c < 0 else "+"
                terms.append(f"{coef} {mono}")
            else:
                terms.append(f"{'-' if c < 0 else '+'} {abs(c)}{mono}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(g: Graph) -> CharPoly:
    """Faddeev-LeVerrier recurrence in exact integer arithmetic."""
    n = g.n
    nbrs = [list(iter_bits(r)) for r in g.rows]
    coeffs = [1]
    m = [[0] * n for _ in range(n)]  # M_0 = 0
    c_prev = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(m[w][j] for w in nbrs[i]) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        # c_{n-k} = -tr(A M_k) / k
        tr = sum(m[w][i] for i in range(n) for w in nbrs[i])
        c, rem = divmod(-tr, k)
        if rem:
            raise InconsistencyError("non-integral Faddeev-LeVerrier coefficient")
        coeffs.append(c)
        c_prev = c
    return CharPoly(tuple(coeffs))


# -- partitions and quotient matrices --------------------------------------

@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(b) for b in blocks))

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise GraphError("partition has an empty block")
            for v in b:
                if not 0 <= v < n:
                    raise GraphError(f"vertex {v} out of range")
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise GraphError("partition does not cover every vertex")


@dataclass(frozen=True)
class QuotientMatrix:
    """Average neighbour counts between blocks; exact entries kept as Fractions."""
    exact: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def entries(self) -> np.ndarray:
        return np.array([[float(q) for q in row] for row in self.exact])

    @property
    def k(self) -> int:
        return len(self.exact)


def quotient_matrix(g: Graph, pi: Partition | Sequence[Sequence[int]]) -> QuotientMatrix:
    if not isinstance(pi, Partition):
        pi = Partition.of(pi)
    pi.validate(g.n)
    masks = []
    for b in pi.blocks:
        m = 0
        for v in b:
            m |= 1 << v
        masks.append(m)
    exact = []
    equitable = True
    for b in pi.blocks:
        row = []
        for mj in masks:
            counts = [(g.rows[v] & mj).bit_count() for v in b]
            if min(counts) != max(counts):
                equitable = False
            row.append(Fraction(sum(counts), len(b)))
        exact.append(tuple(row))
    return QuotientMatrix(tuple(exact), equitable)


def equitable_partition(g: Graph, blocks: Sequence[Sequence[int]] | None = None) -> Partition:
    """Coarsest equitable partition refining ``blocks`` (default: one block)."""
    cells = [list(b) for b in blocks] if blocks else [list(range(g.n))]
    queue = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        queue.append(m)
    return Partition.of(_refine(g.rows, cells, queue))


def _small_char_poly(q: np.ndarray) -> list[float]:
    k = q.shape[0]
    if k == 1:
        return [1.0, -q[0, 0]]
    if k == 2:
        return [1.0, -np.trace(q), float(np.linalg.det(q))]
    minors = sum(q[i, i] * q[j, j] - q[i, j] * q[j, i] for i in range(3) for j in range(i + 1, 3))
    return [1.0, -np.trace(q), minors, -float(np.linalg.det(q))]


def quotient_spectral_radius(q: QuotientMatrix | np.ndarray, tol: float = 1e-13,
                             max_iter: int = MAX_ITER) -> float:
    """Perron value of a non-negative matrix.

    Power iteration on ``Q + I`` with Collatz-Wielandt bounds
    ``min (Qx)_i / x_i <= rho <= max (Qx)_i / x_i``; for k <= 3 the value is
    cross-checked against the largest real root of the characteristic polynomial.
    """
    mat = q.entries if isinstance(q, QuotientMatrix) else np.asarray(q, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("quotient matrix must be square")
    if np.any(mat < 0):
        raise ValueError("quotient matrix must be non-negative")
    k = mat.shape[0]
    shifted = mat + np.eye(k)
    x = np.ones(k)
    lo = hi = 0.0
    for _ in range(max_iter):
        y = shifted @ x
        ratios = y / x
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= tol * max(1.0, hi):
            break
        x = y / np.linalg.norm(y)
    else:
        raise ConvergenceError(f"quotient power iteration stalled with bounds [{lo}, {hi}]")
    rho = (lo + hi) / 2 - 1.0
    if k <= 3:
        root = polynomial.largest_real_root(_small_char_poly(mat))
        if abs(root - rho) > 1e-8 * max(1.0, rho):
            raise InconsistencyError(f"quotient radius {rho} disagrees with characteristic root {root}")
    return rho


# -- degree means ----------------------------------------------------------

def p_mean(d: Sequence[float], p: float) -> float:
    """(mean of d_i^p)^(1/p); ``p = inf`` gives the maximum."""
    if len(d) == 0:
        raise ValueError("p_mean of an empty sequence")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    top = max(d)
    if math.isinf(p):
        return float(top)
    if top == 0:
        return 0.0
    s = sum((x / top) ** p for x in d) / len(d)
    return float(top * s ** (1.0 / p))


def char_rho(g: Graph, tol: float = 1e-10) -> float:
    """The p in [1, inf] for which the degree p-mean equals the spectral radius."""
    rho = spectral_radius(g).rho
    d = g.degrees()
    if min(d) == max(d):
        if abs(rho - d[0]) > 1e-8:
            raise InconsistencyError(f"regular graph of degree {d[0]} has spectral radius {rho}")
        return 1.0
    lo, hi = 1.0, 2.0
    while p_mean(d, hi) < rho:
        lo, hi = hi, hi * 2
        if hi > 2.0**60:
            raise ConvergenceError("could not bracket the spectral mean characteristic")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if p_mean(d, mid) < rho:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def rho_lower_bound(g: Graph) -> float:
    """Average degree 2e/n, a lower bound on the spectral radius."""
    return 2 * g.edge_count / g.n
