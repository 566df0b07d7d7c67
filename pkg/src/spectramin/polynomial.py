"""Real-root isolation for integer/rational polynomials.

Coefficients are listed highest degree first. Roots are isolated between the
critical points (real roots of the derivative, found recursively) and then
refined by bisection. A critical point where the polynomial vanishes (to a
relative tolerance) is reported as a repeated root.
The same code runs on floats, Fractions or mpmath numbers.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .errors import RootNotFoundError

Coeffs = Sequence


def trim(coeffs: Coeffs) -> list:
    c = list(coeffs)
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
    return c


def evaluate(coeffs: Coeffs, x):
    acc = 0 * x
    for c in coeffs:
        acc = acc * x + c
    return acc


def derivative(coeffs: Coeffs) -> list:
    d = len(coeffs) - 1
    return [c * (d - i) for i, c in enumerate(coeffs[:-1])]


def cauchy_bound(coeffs: Coeffs) -> float:
    """Every root has absolute value below this bound."""
    lead = abs(coeffs[0])
    return 1.0 + max((abs(float(c)) / float(lead) for c in coeffs[1:]), default=0.0)


def _bisect(f: Callable, lo, hi, flo, steps: int):
    for _ in range(steps):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(coeffs: Coeffs, num: Callable = float, steps: int = 200) -> list:
    """Sorted real roots; a repeated root is reported once."""
    c = trim(coeffs)
    deg = len(c) - 1
    if deg <= 0:
        return []
    cn = [num(x) for x in c]
    if deg == 1:
        return [-cn[1] / cn[0]]
    bound = num(cauchy_bound(c))
    crit = [x for x in real_roots(derivative(c), num, steps) if -bound < x < bound]
    f = lambda x: evaluate(cn, x)  # noqa: E731
    rel = 1e-10 if num is float else num(10) ** (10 - mpmath.mp.dps)
    scale = max(abs(x) for x in cn)

    def vanishes(x) -> bool:
        return abs(f(x)) <= rel * scale * max(1, abs(x)) ** deg

    # p is monotone between consecutive critical points
    roots = [x for x in crit if vanishes(x)]
    points = [-bound] + crit + [bound]
    for a, b in zip(points, points[1:]):
        fa, fb = f(a), f(b)
        if fa == 0 or fb == 0 or (a in crit and vanishes(a)) or (b in crit and vanishes(b)):
            if fb == 0 and b not in crit:
                roots.append(b)
            continue
        if (fa > 0) != (fb > 0):
            roots.append(_bisect(f, a, b, fa, steps))
    return sorted(roots)


def largest_real_root(coeffs: Coeffs, lower: float | None = None, num: Callable = float,
                      steps: int = 200):
    """Largest real root, optionally required to be at least ``lower``."""
    roots = real_roots(coeffs, num, steps)
    if not roots or (lower is not None and roots[-1] < lower):
        raise RootNotFoundError(f"no real root >= {lower} for polynomial {list(coeffs)}")
    return roots[-1]


def largest_root_mp(coeffs: Coeffs, dps: int = 60) -> mpmath.mpf:
    """Largest real root evaluated at ``dps`` decimal digits."""
    with mpmath.workdps(dps):
        return +largest_real_root(coeffs, num=mpmath.mpf, steps=4 * dps)


def simple_root_mp(coeffs: Coeffs, approx: float, width: float = 1e-6, dps: int = 60) -> mpmath.mpf:
    """Refine a simple root known to lie within ``width`` of ``approx``."""
    with mpmath.workdps(dps):
        cn = [mpmath.mpf(int(c)) if isinstance(c, int) else mpmath.mpf(c) for c in coeffs]
        f = lambda x: evaluate(cn, x)  # noqa: E731
        lo, hi = mpmath.mpf(approx) - width, mpmath.mpf(approx) + width
        flo, fhi = f(lo), f(hi)
        if flo == 0:
            return lo
        if fhi == 0:
            return hi
        if (flo > 0) == (fhi > 0):
            return largest_root_mp(coeffs, dps)
        return +_bisect(f, lo, hi, flo, 4 * dps)


def gcd(p: Coeffs, q: Coeffs) -> list[Fraction]:
    """Monic greatest common divisor over the rationals."""
    a = trim([Fraction(x) for x in p])
    b = trim([Fraction(x) for x in q])
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _poly_rem(a, b)
    lead = a[0]
    return [x / lead for x in a]


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and not (len(a) == 1 and a[0] == 0):
        factor = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= factor * b[i]
        a.pop(0)
        a = trim(a) if a else [Fraction(0)]
    return a or [Fraction(0)]

