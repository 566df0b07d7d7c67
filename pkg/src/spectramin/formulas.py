"""Closed-form minimum spectral radii and predicted minimizer families.

``predict(n, e)`` returns every regime that covers (n, e). Each prediction
carries its value, the polynomial it is a root of (when there is one) and
the families whose members are claimed to be minimizers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import constructions as cons
from .canonical import canonical_key
from .errors import GraphError, InconsistencyError, InfeasibleError
from .graph import Graph, complement, components
from .polynomial import largest_real_root  # noqa: F401  (re-exported)
from .spectral import quotient_spectral_radius, spectral_radius

OVERLAP_TOL = 1e-8

REGIMES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12")


@dataclass(frozen=True)
class RegimePrediction:
    regime: str
    n: int
    e: int
    rho_min_value: float
    polynomial: tuple[Fraction, ...] | None
    families: tuple[str, ...]
    constraints: str
    param: int | None = None

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "n": self.n,
            "e": self.e,
            "rho_min": self.rho_min_value,
            "polynomial": None if self.polynomial is None else [str(c) for c in self.polynomial],
            "families": list(self.families),
        }


def _quadratic(b, c) -> tuple[Fraction, ...]:
    """x^2 + b x + c."""
    return (Fraction(1), Fraction(b), Fraction(c))


def _root_form(a, d) -> tuple[Fraction, ...]:
    """Monic quadratic whose larger root is (a + sqrt(d)) / 2."""
    return _quadratic(-a, Fraction(a * a - d, 4))


def _matrix_char_poly(m: list[list[int]]) -> tuple[Fraction, ...]:
    """det(xI - M) for a 3x3 integer matrix."""
    tr = sum(m[i][i] for i in range(3))
    minors = sum(m[i][i] * m[j][j] - m[i][j] * m[j][i] for i in range(3) for j in range(i + 1, 3))
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return (Fraction(1), Fraction(-tr), Fraction(minors), Fraction(-det))


def _r1(n, e):
    p = comb(n, 2) - e
    if not 1 <= p <= n // 2:
        return None
    value = (n - 3 + math.sqrt((n + 1) ** 2 - 8 * p)) / 2
    return RegimePrediction("R1", n, e, value, _quadratic(-(n - 3), 2 * p + 2 - 2 * n),
                            (f"dense:n={n},p={p}",), "e = C(n,2) - p, 1 <= p <= floor(n/2)", p)


def _r2(n, e):
    if n < 5 or e != comb(n - 1, 2):
        return None
    value = (n - 5 + math.sqrt((n - 1) ** 2 + 8)) / 2
    return RegimePrediction("R2", n, e, value, _quadratic(-(n - 5), -2 * (n - 2)),
                            (f"nm1choose2:n={n}",), "e = C(n-1,2), n >= 5")


def _r3(n, e):
    if n < 5 or n % 2 == 0 or e != comb(n, 2) - (n + 1) // 2:
        return None
    m = [[n - 5, 2, 1], [n - 3, 1, 0], [n - 3, 0, 0]]
    value = quotient_spectral_radius(np.array(m, dtype=float))
    return RegimePrediction("R3", n, e, value, _matrix_char_poly(m), (f"joink2k1:n={n}",),
                            "n odd >= 5, e = C(n,2) - (n+1)/2")


def _r4(n, e):
    if n < 6 or n % 2 or e != comb(n, 2) - (n + 2) // 2:
        return None
    m = [[n - 6, 2, 2], [n - 4, 1, 1], [n - 4, 1, 0]]
    value = quotient_spectral_radius(np.array(m, dtype=float))
    return RegimePrediction("R4", n, e, value, _matrix_char_poly(m), (f"joinp4:n={n}",),
                            "n even >= 6, e = C(n,2) - (n+2)/2")


def _r5(n, e):
    if n < 6 or n % 2:
        return None
    p = comb(n, 2) - e - (n + 2) // 2
    if not 1 <= p <= (n - 4) // 2:
        return None
    d = (n + 1) ** 2 - 8 * p - 8
    value = (n - 5 + math.sqrt(d)) / 2
    return RegimePrediction("R5", n, e, value, _root_form(n - 5, d), (f"g2g3even:n={n},p={p}",),
                            "n even >= 6, e = C(n,2) - ((n+2)/2 + p), 1 <= p <= (n-4)/2", p)


def _r6(n, e):
    # the edge count of the stated family is C(n,2) - ((n+1)/2 + p)
    if n < 5 or n % 2 == 0:
        return None
    p = comb(n, 2) - e - (n + 1) // 2
    if not 1 <= p <= (n - 3) // 2:
        return None
    d = n * (n + 2) - 8 * p - 3
    value = (n - 5 + math.sqrt(d)) / 2
    return RegimePrediction("R6", n, e, value, _root_form(n - 5, d), (f"g2g3odd:n={n},p={p}",),
                            "n odd >= 5, e = C(n,2) - ((n+1)/2 + p), 1 <= p <= (n-3)/2", p)


def _r7(n, e):
    if n < 9 or e != comb(n - 1, 2) - 2:
        return None
    poly = (Fraction(1), Fraction(7 - n), Fraction(4 * (4 - n)), Fraction(6 - 2 * n))
    value = largest_real_root(poly)
    return RegimePrediction("R7", n, e, value, poly,
                            (f"nm3minusedge:n={n},variant=1", f"nm3minusedge:n={n},variant=2"),
                            "n >= 9, e = C(n-1,2) - 2")


def _r8(n, e):
    if n % 2 == 0:
        return None
    k = (n - 1) // 2
    if k < 1 or e != k * (k + 1):
        return None
    return RegimePrediction("R8", n, e, math.sqrt(k * (k + 1)), _quadratic(0, -k * (k + 1)),
                            (f"bipartite:a={k},b={k + 1}",), "n = 2k+1, e = k(k+1)", k)


def _r9(n, e):
    if n < 4 or n % 2 or e != n * n // 4 - 1:
        return None
    h = n // 2 - 1
    value = (n - 2 + math.sqrt(n * n + 4 * n - 12)) / 4
    return RegimePrediction("R9", n, e, value, _quadratic(-h, -h),
                            (f"halfsq:n={n},split=first", f"halfsq:n={n},split=alt"),
                            "n even >= 4, e = n^2/4 - 1")


def _r10(n, e):
    if n % 3 or e != n * n // 3 - 1:
        return None
    poly = (Fraction(1), 1 - Fraction(n, 3), 1 - Fraction(2 * n * n, 9) - Fraction(n, 3),
            -Fraction(2 * n * n, 9) + Fraction(2 * n, 3))
    value = largest_real_root(poly)
    return RegimePrediction("R10", n, e, value, poly, (f"thirdsq:n={n}",), "3 | n, e = n^2/3 - 1")


def _r11(n, e):
    if n < 2 or e != n - 1:
        return None
    return RegimePrediction("R11", n, e, 2 * math.cos(math.pi / (n + 1)), None, (f"path:n={n}",),
                            "e = n - 1")


def _r12(n, e):
    # bicyclic: the B and P members have n + 1 edges
    if n < 4 or e != n + 1:
        return None
    members = cons.bicyclic_pair(n)
    k = math.ceil(n / 3)
    q = n + 1 - 2 * k
    rhos = [spectral_radius(g).rho for g in members]
    if max(rhos) - min(rhos) > OVERLAP_TOL:
        raise InconsistencyError(f"B and P members at n={n} have different spectral radii {rhos}")
    fams = tuple(f"{tag}:p={k},q={q},r={k}" for tag, build in (("b", cons.b_graph), ("p", cons.p_graph))
                 if _builds(build, k, q, k))
    return RegimePrediction("R12", n, e, rhos[0], None, fams,
                            "e = n + 1, n >= 4, k = ceil(n/3)", k)


def _builds(build, *args) -> bool:
    try:
        build(*args)
    except InfeasibleError:
        return False
    return True


_DISPATCH = (_r1, _r2, _r3, _r4, _r5, _r6, _r7, _r8, _r9, _r10, _r11, _r12)


def predict(n: int, e: int) -> list[RegimePrediction]:
    """All regimes covering (n, e); empty when none does.

    Overlapping regimes must agree to 1e-8, otherwise InconsistencyError.
    """
    if n < 1 or not n - 1 <= e <= comb(n, 2):
        return []
    out = [p for f in _DISPATCH if (p := f(n, e)) is not None]
    if out:
        values = [p.rho_min_value for p in out]
        if max(values) - min(values) > OVERLAP_TOL:
            detail = ", ".join(f"{p.regime}={p.rho_min_value!r}" for p in out)
            raise InconsistencyError(f"overlapping regimes disagree at (n={n}, e={e}): {detail}")
    return out


def predicted_value(n: int, e: int) -> float | None:
    preds = predict(n, e)
    return preds[0].rho_min_value if preds else None


def check_overlaps(n_max: int) -> list[tuple[int, int, tuple[str, ...]]]:
    """(n, e, regimes) for every (n, e) with n <= n_max covered more than once."""
    found = []
    for n in range(1, n_max + 1):
        for e in range(n - 1, comb(n, 2) + 1):
            preds = predict(n, e)
            if len(preds) > 1:
                found.append((n, e, tuple(p.regime for p in preds)))
    return found


# -- family membership ------------------------------------------------------

def _complement_parts(g: Graph) -> list[Graph]:
    c = complement(g)
    return [c.induced(sorted(comp)) for comp in components(c)]


def _is_cycle(h: Graph) -> bool:
    return h.n >= 3 and h.min_degree == h.max_degree == 2


def _is_path(h: Graph, k: int) -> bool:
    return h.n == k and h.edge_count == k - 1 and h.max_degree <= 2 and (k == 1 or h.min_degree == 1)


def _parts_match(g: Graph, special: list[str], cycle_vertices: int | None = None) -> bool:
    """Complement components: ``special`` lists required path components
    ("P3", "P4" or "K2"), any extra components must be K2 or cycles, and
    cycles must cover ``cycle_vertices`` vertices when given."""
    parts = _complement_parts(g)
    cyc = 0
    counts = {"K2": 0, "P3": 0, "P4": 0}
    for h in parts:
        if _is_cycle(h):
            cyc += h.n
        elif _is_path(h, 2):
            counts["K2"] += 1
        elif _is_path(h, 3):
            counts["P3"] += 1
        elif _is_path(h, 4):
            counts["P4"] += 1
        else:
            return False
    need = {"K2": 0, "P3": 0, "P4": 0}
    for s in special:
        need[s] += 1
    if counts["P3"] != need["P3"] or counts["P4"] != need["P4"]:
        return False
    if cycle_vertices is not None and cyc != cycle_vertices:
        return False
    if cycle_vertices is None and cyc:
        return False
    return counts["K2"] >= need["K2"]


def _two_apex_pattern(g: Graph) -> bool:
    """Two non-adjacent vertices of degree n/2 - 1 with disjoint neighbourhoods,
    every other vertex of degree n/2."""
    n = g.n
    if n % 2:
        return False
    deg = g.degrees()
    low = [v for v in range(n) if deg[v] == n // 2 - 1]
    if len(low) != 2 or any(d not in (n // 2 - 1, n // 2) for d in deg):
        return False
    u, v = low
    if g.has_edge(u, v):
        return False
    return g.rows[u] & g.rows[v] == 0


def _third_square_pattern(g: Graph) -> bool:
    n = g.n
    s = n // 3
    for part in components(complement(g)):
        if len(part) != s or g.induced(sorted(part)).edge_count:
            continue
        # a complement component is joined to every vertex outside it
        rest = sorted(set(range(n)) - set(part))
        if _two_apex_pattern(g.induced(rest)):
            return True
    return False


def _core_plus_cycles(g: Graph, core_size: int, cores: list[Graph]) -> bool:
    """Complement = complement(core) plus a 2-regular graph on the other vertices."""
    parts = [sorted(c) for c in components(complement(g))]
    comp = complement(g)
    fixed = [c for c in parts if not _is_cycle(comp.induced(c))]
    free = [c for c in parts if _is_cycle(comp.induced(c))]
    base = sum(len(c) for c in fixed)
    core_keys = {canonical_key(c.rows) for c in cores}
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            if base + sum(len(c) for c in extra) != core_size:
                continue
            vs = sorted(v for c in fixed + list(extra) for v in c)
            if canonical_key(g.induced(vs).rows) in core_keys:
                return True
    return False


def _same_as_any(g: Graph, graphs: list[Graph]) -> bool:
    key = canonical_key(g.rows)
    return any(h.n == g.n and canonical_key(h.rows) == key for h in graphs)


def is_predicted_minimizer(g: Graph, pred: RegimePrediction) -> bool:
    """Whether ``g`` belongs to one of the families ``pred`` names.

    Families with a free regular slot are recognised structurally through
    the complement, so any choice of the regular part is accepted.
    """
    if (g.n, g.edge_count) != (pred.n, pred.e):
        raise GraphError(f"graph has (n, e) = ({g.n}, {g.edge_count}), prediction is for "
                         f"({pred.n}, {pred.e})")
    n = g.n
    r = pred.regime
    if r == "R1":
        return complement(g).max_degree <= 1
    if r == "R2":
        parts = _complement_parts(g)
        return sum(1 for h in parts if _is_path(h, 2)) == 1 and \
            all(_is_cycle(h) or _is_path(h, 2) for h in parts) and \
            sum(h.n for h in parts if _is_cycle(h)) == n - 2
    if r == "R3":
        return _parts_match(g, ["P3"])
    if r == "R4":
        return _parts_match(g, ["P4"])
    if r == "R5":
        return _parts_match(g, [], cycle_vertices=2 * pred.param + 2)
    if r == "R6":
        return _parts_match(g, [], cycle_vertices=2 * pred.param + 1)
    if r == "R7":
        return _core_plus_cycles(g, 6, list(cons.SIX_VERTEX_MINIMIZERS.values()))
    if r == "R8":
        k = pred.param
        return _same_as_any(g, [cons.complete_bipartite(k, k + 1)])
    if r == "R9":
        return _two_apex_pattern(g)
    if r == "R10":
        return _third_square_pattern(g)
    if r == "R11":
        return _same_as_any(g, [cons.path(n)])
    if r == "R12":
        return _same_as_any(g, cons.bicyclic_pair(n))
    raise GraphError(f"unknown regime {r!r}")


def matches_any(g: Graph, preds: list[RegimePrediction]) -> list[str]:
    """Regimes among ``preds`` whose family contains ``g``."""
    return [p.regime for p in preds if is_predicted_minimizer(g, p)]
