"""Edge rotation, local switching, Kelmans transformation and internal-path subdivision.

The transforms only check structural preconditions. The eigenvector
conditions under which they increase (or do not increase) the spectral
radius are evaluated separately by ``hypothesis_rotation`` and
``hypothesis_switch``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph, iter_bits
from .spectral import spectral_radius


@dataclass(frozen=True)
class RotationSpec:
    """Delete rs, add rt."""
    r: int
    s: int
    t: int

    def check(self, g: Graph) -> None:
        _check_vertices(g, self.r, self.s, self.t)
        if self.r == self.t or self.s == self.t:
            raise GraphError(f"rotation needs distinct r, s, t: {self}")
        if not g.has_edge(self.r, self.s):
            raise GraphError(f"rotation needs edge {self.r}-{self.s}")
        if g.has_edge(self.r, self.t):
            raise GraphError(f"rotation needs {self.r} and {self.t} non-adjacent")


@dataclass(frozen=True)
class SwitchSpec:
    """Replace st and uv by sv and tu."""
    s: int
    t: int
    u: int
    v: int

    def check(self, g: Graph) -> None:
        _check_vertices(g, self.s, self.t, self.u, self.v)
        if len({self.s, self.t, self.u, self.v}) != 4:
            raise GraphError(f"switch needs four distinct vertices: {self}")
        if not (g.has_edge(self.s, self.t) and g.has_edge(self.u, self.v)):
            raise GraphError(f"switch needs edges {self.s}-{self.t} and {self.u}-{self.v}")
        if g.has_edge(self.s, self.v) or g.has_edge(self.t, self.u):
            raise GraphError(f"switch needs {self.s}-{self.v} and {self.t}-{self.u} absent")


def _check_vertices(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")


def rotate_edge(g: Graph, spec: RotationSpec) -> Graph:
    spec.check(g)
    return g.with_edges(add=[(spec.r, spec.t)], remove=[(spec.r, spec.s)])


def local_switch(g: Graph, spec: SwitchSpec) -> Graph:
    spec.check(g)
    return g.with_edges(add=[(spec.s, spec.v), (spec.t, spec.u)],
                        remove=[(spec.s, spec.t), (spec.u, spec.v)])


def kelmans(g: Graph, u: int, v: int) -> Graph:
    """Move every neighbour of v that is not already adjacent to u over to u."""
    _check_vertices(g, u, v)
    if u == v:
        raise GraphError("Kelmans transformation needs u != v")
    private = g.rows[v] & ~g.rows[u] & ~(1 << u)
    moved = list(iter_bits(private))
    return g.with_edges(add=[(u, w) for w in moved], remove=[(v, w) for w in moved])


def find_internal_paths(g: Graph) -> list[tuple[int, ...]]:
    """Maximal internal paths: endpoints of degree >= 3 (possibly equal),
    interior vertices of degree 2. Each path is listed once, in the
    lexicographically smaller of its two directions."""
    deg = g.degrees()
    found = set()
    for a in range(g.n):
        if deg[a] < 3:
            continue
        for b in iter_bits(g.rows[a]):
            walk = [a, b]
            prev, cur = a, b
            while deg[cur] == 2 and cur != a:
                nxt = next(w for w in iter_bits(g.rows[cur]) if w != prev)
                walk.append(nxt)
                prev, cur = cur, nxt
            if deg[cur] >= 3:
                p = tuple(walk)
                found.add(min(p, p[::-1]))
    return sorted(found)


def on_internal_path(g: Graph, v: int, w: int) -> bool:
    for p in find_internal_paths(g):
        for a, b in zip(p, p[1:]):
            if {a, b} == {v, w}:
                return True
    return False


def subdivide_internal(g: Graph, v: int, w: int) -> Graph:
    """Replace vw by v-z-w through a new vertex z = n."""
    _check_vertices(g, v, w)
    if not g.has_edge(v, w):
        raise GraphError(f"no edge {v}-{w} to subdivide")
    if not on_internal_path(g, v, w):
        raise GraphError(f"edge {v}-{w} is not on an internal path")
    z = g.n
    rows = list(g.rows) + [0]
    bigger = Graph(g.n + 1, tuple(rows))
    return bigger.with_edges(add=[(v, z), (z, w)], remove=[(v, w)])


def hypothesis_rotation(g: Graph, spec: RotationSpec, atol: float = 0.0) -> bool:
    """x_t >= x_s for the principal eigenvector x of g."""
    spec.check(g)
    x = spectral_radius(g).eigenvector
    return bool(x[spec.t] >= x[spec.s] - atol)


def hypothesis_switch(g: Graph, spec: SwitchSpec, atol: float = 0.0) -> bool:
    """(x_s - x_u)(x_v - x_t) >= 0 for the principal eigenvector x of g."""
    spec.check(g)
    x = spectral_radius(g).eigenvector
    return bool((x[spec.s] - x[spec.u]) * (x[spec.v] - x[spec.t]) >= -atol)


_TRANSFORM_FIELDS = {
    "rotate": ("r", "s", "t"),
    "switch": ("s", "t", "u", "v"),
    "kelmans": ("u", "v"),
    "subdivide": ("v", "w"),
}


def parse_transform(text: str) -> tuple[str, dict[str, int]]:
    """Parse ``"rotate:r=1,s=0,t=3"`` into ``("rotate", {"r": 1, "s": 0, "t": 3})``."""
    m = re.fullmatch(r"\s*(\w+)\s*:\s*(.*)", text)
    if not m or m.group(1) not in _TRANSFORM_FIELDS:
        raise GraphError(f"cannot parse transform {text!r}; kinds: {', '.join(_TRANSFORM_FIELDS)}")
    kind = m.group(1)
    params = {}
    for part in m.group(2).split(","):
        k, sep, val = part.partition("=")
        if not sep or not val.strip().lstrip("-").isdigit():
            raise GraphError(f"bad transform parameter {part!r}")
        params[k.strip()] = int(val)
    if set(params) != set(_TRANSFORM_FIELDS[kind]):
        raise GraphError(f"{kind} needs exactly {', '.join(_TRANSFORM_FIELDS[kind])}")
    return kind, params


def apply_transform(g: Graph, text: str) -> Graph:
    kind, p = parse_transform(text)
    if kind == "rotate":
        return rotate_edge(g, RotationSpec(**p))
    if kind == "switch":
        return local_switch(g, SwitchSpec(**p))
    if kind == "kelmans":
        return kelmans(g, p["u"], p["v"])
    return subdivide_internal(g, p["v"], p["w"])
