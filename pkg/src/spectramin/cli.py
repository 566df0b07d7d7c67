"""Command-line interface: ``spectramin <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import constructions, search, transforms
from .errors import ConvergenceError, Graph6Error, GraphError, InconsistencyError, InfeasibleError
from .graph import Graph, is_connected
from .graph6 import from_graph6, to_graph6
from .spectral import char_poly, char_rho, rho_lower_bound, spectral_radius

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4
BUDGET_ENV = "SPECTRAMIN_BUDGET_SECS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str
    tol: float
    workers: int
    checkpoint: str | None
    budget_secs: float | None

    def __post_init__(self):
        if self.tol <= 0:
            raise UsageError("--tol must be positive")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")


def _read_graph(text: str) -> Graph:
    if text.startswith("@"):
        with open(text[1:]) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise UsageError(f"no graph in {text[1:]}")
        text = lines[0].split()[0]
    try:
        return from_graph6(text)
    except Graph6Error as exc:
        raise UsageError(str(exc)) from exc


def _parse_range(text: str | None) -> list[int] | None:
    if text is None:
        return None
    out = []
    for part in text.split(","):
        a, sep, b = part.partition("-")
        try:
            out.extend(range(int(a), int(b) + 1) if sep else [int(a)])
        except ValueError as exc:
            raise UsageError(f"bad edge range {text!r}") from exc
    return out


def _budget(args) -> float | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise UsageError(f"{BUDGET_ENV} must be a number of seconds") from exc
    return None


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        for k, v in obj.items():
            out.write(f"{k}: {v}\n")


# -- commands -------------------------------------------------------------------

def cmd_rho(args, cfg: RunConfig, out) -> int:
    g = _read_graph(args.graph)
    if not is_connected(g):
        raise InfeasibleError("spectral radius report needs a connected graph")
    res = spectral_radius(g, tol=cfg.tol)
    _emit({
        "graph6": to_graph6(g), "n": g.n, "e": g.edge_count, "rho": res.rho,
        "error_bound": res.error_bound, "iterations": res.iterations,
        "eigenvector": [round(float(x), 12) for x in res.eigenvector],
        "char_rho": char_rho(g), "lower_bound": rho_lower_bound(g),
        "char_poly": list(char_poly(g).coefficients) if g.n <= 24 else None,
        "irregularity": g.irregularity,
    }, cfg.fmt, out)
    return EXIT_OK


def cmd_construct(args, cfg: RunConfig, out) -> int:
    spec = constructions.FamilySpec.parse(args.spec)
    if spec.tag == "alon":
        graphs = constructions.alon_pair(*[spec.params[k] for k in ("t", "n")])
    else:
        graphs = (constructions.family_minimizer(spec),)
    for g in graphs:
        if cfg.fmt == "text":
            out.write(to_graph6(g) + "\n")
        else:
            _emit({"family": spec.family, "spec": str(spec), "graph6": to_graph6(g), "n": g.n,
                   "e": g.edge_count, "connected": is_connected(g)}, cfg.fmt, out)
    return EXIT_OK


def cmd_transform(args, cfg: RunConfig, out) -> int:
    g = _read_graph(args.graph)
    h = transforms.apply_transform(g, args.spec)
    before = spectral_radius(g, tol=cfg.tol, require_connected=False).rho
    after = spectral_radius(h, tol=cfg.tol, require_connected=False).rho
    _emit({"graph6": to_graph6(h), "n": h.n, "e": h.edge_count, "connected": is_connected(h),
           "rho_before": before, "rho_after": after}, cfg.fmt, out)
    return EXIT_OK


def cmd_minimize(args, cfg: RunConfig, out) -> int:
    if args.n is None or args.e is None:
        raise UsageError("minimize needs --n and --e")
    rep = search.minimizers(args.n, args.e, cfg.workers)
    if cfg.fmt == "text":
        out.write(f"n={rep.n} e={rep.e} rho_min={rep.rho_min!r} minimizers={len(rep.minimizers)}\n")
        for code, s in zip(rep.minimizers, rep.degree_spread):
            out.write(f"  {code} irregularity={s}\n")
        for f in rep.formula_check:
            out.write(f"  {f['regime']}: predicted={f['predicted']!r} value_match={f['value_match']} "
                      f"members={f['members']}\n")
    else:
        out.write(rep.to_json() + "\n")
    return EXIT_OK


def _table(args, cfg: RunConfig) -> search.TableResult:
    if args.nmax is None:
        raise UsageError("--nmax is required")
    if args.nmax > search.FULL_SWEEP_MAX_N and cfg.budget_secs is None:
        raise UsageError(f"--nmax above {search.FULL_SWEEP_MAX_N} needs --budget or {BUDGET_ENV}")
    e_filter = _parse_range(args.e_range)
    if e_filter is None and args.nmax > search.FULL_SWEEP_MAX_N:
        raise UsageError(f"--nmax above {search.FULL_SWEEP_MAX_N} needs --e-range")
    return search.rho_min_table(args.nmax, e_filter, cfg.workers, cfg.checkpoint, cfg.budget_secs,
                                n_min=args.nmin, allow_n10=cfg.budget_secs is not None)


def cmd_table(args, cfg: RunConfig, out) -> int:
    res = _table(args, cfg)
    if cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(search.CSV_COLUMNS)
        for rep in res.reports:
            w.writerow(search.csv_row(rep))
    else:
        for rep in res.reports:
            out.write(rep.to_json() + "\n")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(search.CSV_COLUMNS)
            for rep in res.reports:
                w.writerow(search.csv_row(rep))
    if not res.complete:
        print("table incomplete: time budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    res = _table(args, cfg)
    failed = False
    for rep in res.reports:
        structure = search.structure_violations(rep)
        match = rep.formula_match
        row = {
            "n": rep.n, "e": rep.e, "hong": rep.hong,
            "witnesses": [c for c, s in zip(rep.minimizers, rep.degree_spread) if s > 1],
            "regimes": rep.regimes, "formula_match": match,
            "structure_violations": [list(v) for v in structure],
        }
        failed |= (not rep.hong) or match is False or bool(structure)
        if cfg.fmt == "json":
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
        else:
            regime = ";".join(rep.regimes) or "-"
            verdict = "-" if match is None else ("ok" if match else "MISMATCH")
            out.write(f"n={rep.n:<2} e={rep.e:<3} hong={'yes' if rep.hong else 'NO'} "
                      f"formula={regime}:{verdict} structure={'ok' if not structure else structure}\n")
    if failed:
        print("verification FAILED: a checked claim is contradicted", file=sys.stderr)
        return EXIT_VERIFY
    if not res.complete:
        print("verification incomplete: time budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {
    "rho": cmd_rho, "construct": cmd_construct, "transform": cmd_transform,
    "minimize": cmd_minimize, "table": cmd_table, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--checkpoint", default=None, help="JSON-lines file to resume from")
    common.add_argument("--budget", type=float, default=None,
                        help=f"time budget in seconds (default: ${BUDGET_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="spectramin", description="Minimum spectral radius of connected graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("rho", parents=[common], help="spectral data of one graph")
    s.add_argument("graph", help="graph6 string or @file")
    s = sub.add_parser("construct", parents=[common], help="build a named family member")
    s.add_argument("spec", help='family spec, e.g. "g2g3even:n=8,p=1"')
    s = sub.add_parser("transform", parents=[common], help="apply a graph transformation")
    s.add_argument("graph", help="graph6 string or @file")
    s.add_argument("spec", help='transform spec, e.g. "rotate:r=1,s=0,t=3"')
    s = sub.add_parser("minimize", parents=[common], help="exhaustive minimizers for (n, e)")
    s.add_argument("--n", type=int)
    s.add_argument("--e", type=int)
    for name, helptext in (("table", "rho_min table over all feasible (n, e)"),
                           ("verify", "Hong property and formula cross-checks")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--nmax", type=int)
        s.add_argument("--nmin", type=int, default=1)
        s.add_argument("--e-range", default=None, help='edge counts, e.g. "34,36-38"')
        s.add_argument("--csv", default=None, help="also write the CSV summary here")
    return p


_DEFAULT_FORMAT = {"rho": "json", "construct": "text", "transform": "json", "minimize": "json",
                   "table": "json", "verify": "text"}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage error or --help
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig(args.command, args.format or _DEFAULT_FORMAT[args.command], args.tol,
                        args.workers, args.checkpoint, _budget(args))
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(f"spectramin: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InfeasibleError, GraphError) as exc:
        print(f"spectramin: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InconsistencyError as exc:
        print(f"spectramin: verification FAILED: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ConvergenceError as exc:
        print(f"spectramin: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
