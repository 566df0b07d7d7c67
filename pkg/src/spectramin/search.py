"""Exhaustive minimizer search over connected (n, e)-graphs.

Every isomorphism class is screened with a dense eigensolver. Graphs within
``TIE_BAND`` of the smallest value are re-examined exactly: identical
characteristic polynomials are ties, and distinct polynomials are compared
through their largest roots at high precision (with a gcd check when two
roots agree to working precision).
"""
from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import mpmath
import numpy as np

from . import formulas
from .canonical import canonical_graph6
from .enumeration import MAX_ENUMERATION_VERTICES, _check_range, connected_keys
from .errors import GraphError, InconsistencyError
from .graph import Graph
from .graph6 import from_graph6
from .polynomial import gcd, largest_root_mp
from .spectral import batch_spectral_radii, char_poly, spectral_radius

log = logging.getLogger(__name__)

TIE_BAND = 1e-9
FORMULA_TOL = 1e-8
MP_DPS = 60
BATCH = 20000
FULL_SWEEP_MAX_N = 9


@dataclass
class MinimizerReport:
    n: int
    e: int
    rho_min: float
    rho_error: float
    minimizers: list[str]
    degree_spread: list[int]
    formula_check: list[dict] = field(default_factory=list)
    graphs_enumerated: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def hong(self) -> bool:
        return all(s <= 1 for s in self.degree_spread)

    @property
    def regimes(self) -> list[str]:
        return [f["regime"] for f in self.formula_check]

    @property
    def formula_match(self) -> bool | None:
        """None when no regime covers (n, e)."""
        if not self.formula_check:
            return None
        values_ok = all(f["value_match"] for f in self.formula_check)
        covered = all(any(f["members"][i] for f in self.formula_check)
                      for i in range(len(self.minimizers)))
        return values_ok and covered

    def graphs(self) -> list[Graph]:
        return [from_graph6(s) for s in self.minimizers]

    def to_dict(self) -> dict:
        """Serialized form; wall time is left out so reruns are byte-identical."""
        return {
            "n": self.n,
            "e": self.e,
            "rho_min": self.rho_min,
            "rho_error": self.rho_error,
            "minimizers": self.minimizers,
            "degree_spread": self.degree_spread,
            "formula_check": self.formula_check,
            "graphs_enumerated": self.graphs_enumerated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "MinimizerReport":
        return cls(n=d["n"], e=d["e"], rho_min=d["rho_min"], rho_error=d["rho_error"],
                   minimizers=list(d["minimizers"]), degree_spread=list(d["degree_spread"]),
                   formula_check=list(d.get("formula_check", [])),
                   graphs_enumerated=d.get("graphs_enumerated", 0))

    @classmethod
    def from_json(cls, line: str) -> "MinimizerReport":
        return cls.from_dict(json.loads(line))


def _screen(keys: Sequence[Sequence[int]], n: int) -> np.ndarray:
    out = np.empty(len(keys))
    for i in range(0, len(keys), BATCH):
        out[i:i + BATCH] = batch_spectral_radii(keys[i:i + BATCH], n)
    return out


def _resolve_ties(band: list[Graph]) -> tuple[list[Graph], mpmath.mpf]:
    """Exact minimizers among near-minimal candidates and their common value."""
    by_poly: dict[tuple[int, ...], list[Graph]] = {}
    for g in band:
        by_poly.setdefault(char_poly(g).coefficients, []).append(g)
    with mpmath.workdps(MP_DPS):
        roots = {p: largest_root_mp(p, MP_DPS) for p in by_poly}
        best = min(roots.values())
        eps = mpmath.mpf(10) ** (-(MP_DPS - 15))
        winners = [p for p, r in roots.items() if abs(r - best) <= eps]
        ref = winners[0]
        for p in winners[1:]:
            common = gcd(ref, p)
            if len(common) == 1 or abs(_eval_rational(common, best)) > eps:
                raise InconsistencyError(f"largest roots agree to {MP_DPS - 15} digits but the "
                                         f"polynomials share no factor: {ref} vs {p}")
    graphs = [g for p in winners for g in by_poly[p]]
    return graphs, best


def _eval_rational(coeffs, x):
    acc = 0 * x
    for c in coeffs:
        acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
    return acc


def minimizers(n: int, e: int, workers: int = 1) -> MinimizerReport:
    """Minimum spectral radius over connected (n, e)-graphs and every graph attaining it."""
    _check_range(n, e)
    start = time.perf_counter()
    keys = connected_keys(n, e, workers)
    radii = _screen(keys, n)
    low = float(radii.min())
    band = [Graph(n, tuple(keys[i])) for i in np.flatnonzero(radii <= low + TIE_BAND)]
    winners, exact = _resolve_ties(band)
    rho_min = float(exact)
    check = spectral_radius(winners[0])
    if abs(check.rho - rho_min) > check.error_bound + 1e-12:
        raise InconsistencyError(f"power iteration {check.rho} disagrees with exact root {rho_min}")
    codes = sorted(canonical_graph6(g) for g in winners)
    graphs = [from_graph6(c) for c in codes]
    report = MinimizerReport(
        n=n, e=e, rho_min=rho_min, rho_error=max(check.error_bound, abs(check.rho - rho_min)),
        minimizers=codes, degree_spread=[g.irregularity for g in graphs],
        formula_check=_formula_check(graphs, rho_min, n, e),
        graphs_enumerated=len(keys),
    )
    report.wall_time = time.perf_counter() - start
    return report


def _formula_check(graphs: list[Graph], rho_min: float, n: int, e: int) -> list[dict]:
    out = []
    for pred in formulas.predict(n, e):
        out.append({
            "regime": pred.regime,
            "predicted": pred.rho_min_value,
            "value_match": abs(pred.rho_min_value - rho_min) <= FORMULA_TOL,
            "members": [formulas.is_predicted_minimizer(g, pred) for g in graphs],
        })
    return out


def verify_hong(n: int, e: int, workers: int = 1) -> tuple[bool, list[str]]:
    """(every minimizer has max degree - min degree <= 1, violating minimizers)."""
    rep = minimizers(n, e, workers)
    bad = [code for code, s in zip(rep.minimizers, rep.degree_spread) if s > 1]
    return not bad, bad


def structure_violations(report: MinimizerReport) -> list[tuple[str, str]]:
    """Minimizers breaking the degree-structure lemmas, as (check, graph6) pairs.

    Checks: no degree-1 vertex when e >= n; no non-adjacent pair of degrees
    n-2 and <= n-4; no vertex of degree n-1 when e < C(n,2) - n/2; not exactly
    one vertex of degree n-2 when e < C(n,2) - n.
    """
    n, e = report.n, report.e
    out = []
    for code, g in zip(report.minimizers, report.graphs()):
        deg = g.degrees()
        if e >= n and 1 in deg:
            out.append(("degree-one", code))
        if n >= 4:
            high = [v for v in range(n) if deg[v] == n - 2]
            low = [u for u in range(n) if deg[u] <= n - 4]
            if any(not g.has_edge(v, u) for v in high for u in low if u != v):
                out.append(("nonadjacent-n-2", code))
        if n >= 3 and 2 * e < 2 * comb(n, 2) - n and n - 1 in deg:
            out.append(("full-degree", code))
        if e < comb(n, 2) - n and deg.count(n - 2) == 1:
            out.append(("single-n-2", code))
    return out


# -- tables -------------------------------------------------------------------

@dataclass
class TableResult:
    reports: list[MinimizerReport]
    complete: bool


def feasible_pairs(n_max: int, n_min: int = 1,
                   e_filter: Iterable[int] | None = None) -> list[tuple[int, int]]:
    allowed = None if e_filter is None else set(e_filter)
    return [(n, e) for n in range(n_min, n_max + 1) for e in range(n - 1, comb(n, 2) + 1)
            if allowed is None or e in allowed]


def load_checkpoint(path: str | os.PathLike) -> dict[tuple[int, int], MinimizerReport]:
    done = {}
    p = Path(path)
    if not p.exists():
        return done
    for line in p.read_text().splitlines():
        if line.strip():
            rep = MinimizerReport.from_json(line)
            done[(rep.n, rep.e)] = rep
    return done


def rho_min_table(n_max: int, e_filter: Iterable[int] | None = None, workers: int = 1,
                  checkpoint: str | os.PathLike | None = None, budget_secs: float | None = None,
                  n_min: int = 1, allow_n10: bool = False) -> TableResult:
    """One report per feasible (n, e), in order of n then e.

    With a checkpoint path, finished rows are appended as JSON lines and
    reused on the next call. When the time budget runs out the table is
    returned with ``complete=False``.
    """
    if n_max > FULL_SWEEP_MAX_N and not allow_n10:
        raise GraphError(f"n_max={n_max} needs the explicit n = 10 budget flag")
    if n_max > MAX_ENUMERATION_VERTICES:
        raise GraphError(f"enumeration supports n <= {MAX_ENUMERATION_VERTICES}")
    done = load_checkpoint(checkpoint) if checkpoint else {}
    start = time.monotonic()
    reports = []
    for n, e in feasible_pairs(n_max, n_min, e_filter):
        if (n, e) in done:
            reports.append(done[(n, e)])
            continue
        if budget_secs is not None and time.monotonic() - start > budget_secs:
            log.warning("budget of %.0fs exhausted before (n=%d, e=%d)", budget_secs, n, e)
            return TableResult(reports, False)
        rep = minimizers(n, e, workers)
        log.info("n=%d e=%d rho_min=%.12f minimizers=%d (%.2fs)", n, e, rep.rho_min,
                 len(rep.minimizers), rep.wall_time)
        reports.append(rep)
        if checkpoint:
            with open(checkpoint, "a") as fh:
                fh.write(rep.to_json() + "\n")
    return TableResult(reports, True)


CSV_COLUMNS = ("n", "e", "rho_min", "n_minimizers", "max_irregularity", "formula_regime",
               "formula_match")


def csv_row(rep: MinimizerReport) -> list[str]:
    match = rep.formula_match
    return [str(rep.n), str(rep.e), repr(rep.rho_min), str(len(rep.minimizers)),
            str(max(rep.degree_spread)), ";".join(rep.regimes),
            "" if match is None else str(match).lower()]
