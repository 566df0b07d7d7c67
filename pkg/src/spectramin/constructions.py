"""Deterministic builders for named graph families and minimizer constructions."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import ceil, comb

from .errors import InfeasibleError
from .graph import Graph, complement, disjoint_union, empty_graph, is_connected, join, make_graph


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InfeasibleError(msg)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return make_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete bipartite needs both sides >= 1, got ({a}, {b})")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def perfect_matching(n: int) -> Graph:
    _require(n >= 2 and n % 2 == 0, f"perfect matching needs even n >= 2, got {n}")
    return make_graph(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


def cocktail_party(n: int) -> Graph:
    """Complement of a perfect matching on ``n`` (even) vertices."""
    return complement(perfect_matching(n))


def b_graph(p: int, q: int, r: int) -> Graph:
    """Cycles of lengths ``p`` and ``r`` linked by a path with ``q`` edges.

    ``q = 0`` glues the cycles at one vertex. The result has p + q + r - 1
    vertices and p + q + r edges.
    """
    _require(p >= 3 and r >= 3, f"B graph needs cycle lengths >= 3, got p={p}, r={r}")
    _require(q >= 0, f"B graph needs q >= 0, got {q}")
    n = p + q + r - 1
    edges = [(i, (i + 1) % p) for i in range(p)]          # first cycle on 0..p-1
    chain = [0] + list(range(p, p + q))                   # path from vertex 0
    edges += list(zip(chain, chain[1:]))
    hub = chain[-1]
    other = [hub] + list(range(p + q, n))                 # second cycle through hub
    edges += [(other[i], other[(i + 1) % r]) for i in range(r)]
    return make_graph(n, edges)


def p_graph(p: int, q: int, r: int) -> Graph:
    """Three internally disjoint paths with ``p``, ``q``, ``r`` edges between two hubs.

    p + q + r - 1 vertices and p + q + r edges.
    """
    lengths = sorted((p, q, r))
    _require(lengths[0] >= 1, f"P graph needs path lengths >= 1, got {(p, q, r)}")
    _require(lengths[1] >= 2, f"P graph allows at most one direct edge, got {(p, q, r)}")
    n = p + q + r - 1
    nxt = 2
    edges = []
    for length in (p, q, r):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        chain = [0] + inner + [1]
        edges += list(zip(chain, chain[1:]))
    return make_graph(n, edges)


def regular_graph(n: int, d: int) -> Graph:
    """Circulant d-regular graph with offsets 1..d//2 (plus n/2 when d is odd)."""
    _require(n >= 1, f"regular graph needs n >= 1, got {n}")
    _require(0 <= d <= n - 1, f"degree {d} infeasible on {n} vertices")
    _require(n * d % 2 == 0, f"no {d}-regular graph on {n} vertices: n*d is odd")
    offsets = list(range(1, d // 2 + 1))
    if d % 2:
        offsets.append(n // 2)
    edges = [(i, (i + s) % n) for i in range(n) for s in offsets]
    g = make_graph(n, edges)
    if g.max_degree != d or g.min_degree != d:
        raise InfeasibleError(f"circulant construction failed for n={n}, d={d}")
    return g


def dense_minimizer(n: int, p: int) -> Graph:
    """K_{n-2p} joined with the cocktail party graph on 2p vertices."""
    _require(1 <= p <= n // 2, f"need 1 <= p <= floor(n/2), got n={n}, p={p}")
    if 2 * p == n:
        return cocktail_party(n)
    return join(complete(n - 2 * p), cocktail_party(2 * p))


def _reg_or_empty(n: int, d: int) -> Graph | None:
    """d-regular graph on n vertices, None when n == 0."""
    if n == 0:
        return None
    return regular_graph(n, d)


def _join_opt(a: Graph | None, b: Graph | None) -> Graph:
    if a is None:
        return b
    if b is None:
        return a
    return join(a, b)


def _minus_regular(n: int, r: int) -> Graph | None:
    """(n - r)-regular graph on n vertices (None for n == 0)."""
    if n == 0:
        return None
    _require(n - r >= 0, f"no ({n}-{r})-regular graph on {n} vertices")
    return regular_graph(n, n - r)


# The two six-vertex minimizers with 8 edges; vertex i stands for v_{i+1}.
SIX_VERTEX_MINIMIZERS = {
    1: make_graph(6, [(0, 1), (1, 3), (3, 4), (4, 5), (5, 2), (2, 0), (2, 1), (5, 3)]),
    2: make_graph(6, [(0, 1), (1, 3), (3, 4), (4, 5), (2, 3), (2, 0), (5, 1), (2, 5)]),
}


def two_apex(h: Graph, first_half: list[int]) -> Graph:
    """Add apex u adjacent to ``first_half`` of ``h`` and apex v adjacent to the rest."""
    m = h.n
    _require(len(first_half) * 2 == m, "two-apex construction needs an even split of H")
    second = [x for x in range(m) if x not in set(first_half)]
    g = disjoint_union(h, empty_graph(2))
    u, v = m, m + 1
    return g.with_edges(add=[(u, x) for x in first_half] + [(v, x) for x in second])


def _half_split(m: int, split: str) -> list[int]:
    if split == "first":
        return list(range(m // 2))
    if split == "alt":
        return list(range(0, m, 2))
    raise InfeasibleError(f"unknown split {split!r}; use 'first' or 'alt'")


def half_square_two_apex(n: int, split: str = "first", h: Graph | None = None) -> Graph:
    """Two apexes over an (n/2 - 1)-regular H on n - 2 vertices; n^2/4 - 1 edges."""
    _require(n % 2 == 0 and n >= 4, f"needs even n >= 4, got {n}")
    m = n - 2
    if h is None:
        h = regular_graph(m, n // 2 - 1)
    _require(h.n == m and h.max_degree == h.min_degree == n // 2 - 1,
             f"H must be ({n // 2 - 1})-regular on {m} vertices")
    return two_apex(h, _half_split(m, split))


def third_square_apex(n: int, split: str = "first", h: Graph | None = None) -> Graph:
    """(n/3) independent vertices joined to a two-apex graph over an
    (n/3 - 1)-regular H on 2n/3 - 2 vertices; n^2/3 - 1 edges."""
    _require(n % 3 == 0 and n >= 3, f"needs n divisible by 3, got {n}")
    s = n // 3
    m = 2 * s - 2
    if m == 0:
        hat = empty_graph(2)
    else:
        if h is None:
            h = regular_graph(m, s - 1)
        _require(h.n == m and h.max_degree == h.min_degree == s - 1,
                 f"H must be ({s - 1})-regular on {m} vertices")
        hat = two_apex(h, _half_split(m, split))
    return join(empty_graph(s), hat)


def _degree_sequence_graph(degrees: list[int]) -> Graph:
    """Havel-Hakimi realization, ties broken by lowest vertex index."""
    n = len(degrees)
    rem = list(degrees)
    edges = []
    while True:
        order = sorted(range(n), key=lambda v: (-rem[v], v))
        v = order[0]
        if rem[v] == 0:
            break
        targets = order[1:rem[v] + 1]
        if len(targets) < rem[v] or any(rem[t] == 0 for t in targets):
            raise InfeasibleError(f"degree sequence {degrees} is not graphical")
        for t in targets:
            edges.append((v, t))
            rem[t] -= 1
        rem[v] = 0
    return make_graph(n, edges)


def _connect_by_swaps(g: Graph) -> Graph:
    """Merge components with degree-preserving 2-swaps across a cycle edge."""
    from .graph import components
    while True:
        comps = components(g)
        if len(comps) == 1:
            return g
        a_comp, b_comp = comps[0], comps[1]
        swap = None
        for (x, y) in g.edges():
            if x not in a_comp:
                continue
            if not _on_cycle(g, x, y):
                continue
            for (z, w) in g.edges():
                if z in b_comp:
                    swap = (x, y, z, w)
                    break
            if swap:
                break
        if swap is None:
            for (z, w) in g.edges():
                if z in b_comp and _on_cycle(g, z, w):
                    for (x, y) in g.edges():
                        if x in a_comp:
                            swap = (x, y, z, w)
                            break
                    if swap:
                        break
        if swap is None:
            raise InfeasibleError("cannot connect realization by degree-preserving swaps")
        x, y, z, w = swap
        g = g.with_edges(remove=[(x, y), (z, w)], add=[(x, z), (y, w)])


def _on_cycle(g: Graph, x: int, y: int) -> bool:
    h = g.with_edges(remove=[(x, y)])
    from .graph import components
    for c in components(h):
        if x in c:
            return y in c
    return False


def alon_pair(t: int, n: int) -> tuple[Graph, Graph]:
    """Two (n, e)-graphs: a t-regular H plus K_{t+2} joined by one edge, and a
    connected graph with one vertex of degree 2t + 4 and all others of degree t."""
    _require(t >= 2, f"needs t >= 2, got {t}")
    h_order = n - t - 2
    _require(h_order >= t + 1, f"H needs at least t + 1 = {t + 1} vertices, got {h_order}")
    _require(h_order * t % 2 == 0, f"no {t}-regular graph on {h_order} vertices")
    h = regular_graph(h_order, t)
    _require(is_connected(h), "H must be connected")
    g1 = disjoint_union(h, complete(t + 2)).with_edges(add=[(0, h_order)])
    degrees = [2 * t + 4] + [t] * (n - 1)
    _require(sum(degrees) == 2 * g1.edge_count, "degree sums of the pair disagree")
    _require(2 * t + 4 <= n - 1, f"a vertex of degree {2 * t + 4} needs n >= {2 * t + 5}")
    g2 = _connect_by_swaps(_degree_sequence_graph(degrees))
    return g1, g2


# -- family specs ----------------------------------------------------------

FAMILY_TAGS = {
    "path": "Path", "cycle": "Cycle", "complete": "Complete", "bipartite": "CompleteBipartite",
    "cocktail": "CocktailParty", "b": "BGraph", "p": "PGraph", "circulant": "Circulant",
    "dense": "DenseMinimizer", "nm1choose2": "NMinus1Choose2Minimizer", "joink2k1": "JoinK2K1",
    "joinp4": "JoinP4", "g2g3even": "G2JoinG3Even", "g2g3odd": "G2JoinG3Odd",
    "nm3minusedge": "NMinus3MinusEdge", "halfsq": "HalfSquareTwoApex",
    "thirdsq": "ThirdSquareApex", "alon": "AlonPair",
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus integer (or split-name) parameters.

    Text form: ``"g2g3even:n=8,p=1"``.
    """
    tag: str
    params: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        m = re.fullmatch(r"\s*([A-Za-z0-9_]+)\s*(?::\s*(.*))?", text)
        if not m:
            raise InfeasibleError(f"cannot parse family spec {text!r}")
        short = m.group(1).lower()
        if short not in FAMILY_TAGS:
            raise InfeasibleError(f"unknown family {short!r}; known: {', '.join(sorted(FAMILY_TAGS))}")
        params = {}
        if m.group(2):
            for part in m.group(2).split(","):
                if not part.strip():
                    continue
                if "=" not in part:
                    raise InfeasibleError(f"parameter {part!r} is not key=value")
                k, v = (s.strip() for s in part.split("=", 1))
                params[k] = int(v) if re.fullmatch(r"-?\d+", v) else v
        return cls(short, params)

    def __str__(self) -> str:
        body = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.tag}:{body}" if body else self.tag

    @property
    def family(self) -> str:
        return FAMILY_TAGS[self.tag]


def _get(spec: FamilySpec, *names: str, default=None):
    out = []
    for name in names:
        if name in spec.params:
            out.append(spec.params[name])
        elif default is not None:
            out.append(default)
        else:
            raise InfeasibleError(f"family {spec.tag} needs parameter {name!r}")
    return out if len(out) > 1 else out[0]


def family_minimizer(spec: FamilySpec | str) -> Graph:
    """Build the graph described by ``spec``. AlonPair returns its first graph;
    use :func:`alon_pair` for both."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    tag = spec.tag
    if tag == "path":
        return path(_get(spec, "n"))
    if tag == "cycle":
        return cycle(_get(spec, "n"))
    if tag == "complete":
        return complete(_get(spec, "n"))
    if tag == "bipartite":
        return complete_bipartite(*_get(spec, "a", "b"))
    if tag == "cocktail":
        return cocktail_party(_get(spec, "n"))
    if tag == "b":
        return b_graph(*_get(spec, "p", "q", "r"))
    if tag == "p":
        return p_graph(*_get(spec, "p", "q", "r"))
    if tag == "circulant":
        return regular_graph(*_get(spec, "n", "d"))
    if tag == "dense":
        return dense_minimizer(*_get(spec, "n", "p"))
    if tag == "nm1choose2":
        return nminus1_choose2_minimizer(_get(spec, "n"))
    if tag == "joink2k1":
        return join_k2k1(_get(spec, "n"))
    if tag == "joinp4":
        return join_p4(_get(spec, "n"))
    if tag == "g2g3even":
        return g2_join_g3_even(*_get(spec, "n", "p"))
    if tag == "g2g3odd":
        return g2_join_g3_odd(*_get(spec, "n", "p"))
    if tag == "nm3minusedge":
        return nminus3_minus_edge(*_get(spec, "n", "variant"))
    if tag == "halfsq":
        n = _get(spec, "n")
        return half_square_two_apex(n, spec.params.get("split", "first"))
    if tag == "thirdsq":
        n = _get(spec, "n")
        return third_square_apex(n, spec.params.get("split", "first"))
    if tag == "alon":
        return alon_pair(*_get(spec, "t", "n"))[0]
    raise InfeasibleError(f"unknown family {tag!r}")


def nminus1_choose2_minimizer(n: int) -> Graph:
    """Two non-adjacent vertices joined to the complement of a 2-regular graph."""
    _require(n >= 5, f"needs n >= 5, got {n}")
    return join(empty_graph(2), complement(regular_graph(n - 2, 2)))


def join_k2k1(n: int) -> Graph:
    """(n-5)-regular graph on n-3 vertices joined with K2 + K1; n odd."""
    _require(n >= 5 and n % 2 == 1, f"needs odd n >= 5, got {n}")
    return _join_opt(_minus_regular(n - 3, 2), disjoint_union(complete(2), complete(1)))


def join_p4(n: int) -> Graph:
    """(n-6)-regular graph on n-4 vertices joined with P4; n even."""
    _require(n >= 6 and n % 2 == 0, f"needs even n >= 6, got {n}")
    return _join_opt(_minus_regular(n - 4, 2), path(4))


def g2_join_g3_even(n: int, p: int) -> Graph:
    """G^2_{n-2p-2} joined with G^3_{2p+2}; n even, 1 <= p <= (n-4)/2."""
    _require(n >= 6 and n % 2 == 0, f"needs even n >= 6, got {n}")
    _require(1 <= p <= (n - 4) // 2, f"needs 1 <= p <= {(n - 4) // 2}, got {p}")
    return _join_opt(_minus_regular(n - 2 * p - 2, 2), _minus_regular(2 * p + 2, 3))


def g2_join_g3_odd(n: int, p: int) -> Graph:
    """G^2_{n-2p-1} joined with G^3_{2p+1}; n odd, 1 <= p <= (n-3)/2."""
    _require(n >= 5 and n % 2 == 1, f"needs odd n >= 5, got {n}")
    _require(1 <= p <= (n - 3) // 2, f"needs 1 <= p <= {(n - 3) // 2}, got {p}")
    return _join_opt(_minus_regular(n - 2 * p - 1, 2), _minus_regular(2 * p + 1, 3))


def nminus3_minus_edge(n: int, variant: int = 1) -> Graph:
    """A six-vertex 8-edge minimizer joined with an (n-9)-regular graph on n-6 vertices."""
    _require(variant in SIX_VERTEX_MINIMIZERS, f"variant must be 1 or 2, got {variant}")
    _require(n >= 9, f"needs n >= 9, got {n}")
    return join(SIX_VERTEX_MINIMIZERS[variant], _minus_regular(n - 6, 3))


def expected_size(spec: FamilySpec | str) -> tuple[int, int]:
    """(n, e) each family is meant to produce."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    tag = spec.tag
    n = p.get("n")
    if tag == "dense":
        return n, comb(n, 2) - p["p"]
    if tag == "nm1choose2":
        return n, comb(n - 1, 2)
    if tag == "joink2k1":
        return n, comb(n, 2) - (n + 1) // 2
    if tag == "joinp4":
        return n, comb(n, 2) - (n + 2) // 2
    if tag == "g2g3even":
        return n, comb(n, 2) - ((n + 2) // 2 + p["p"])
    if tag == "g2g3odd":
        return n, comb(n, 2) - ((n + 1) // 2 + p["p"])
    if tag == "nm3minusedge":
        return n, comb(n - 1, 2) - 2
    if tag == "halfsq":
        return n, n * n // 4 - 1
    if tag == "thirdsq":
        return n, n * n // 3 - 1
    if tag in ("b", "p"):
        s = p["p"] + p["q"] + p["r"]
        return s - 1, s
    if tag == "alon":
        t = p["t"]
        return n, (t + 1) * (t + 2) // 2 + t * (n - t - 2) // 2 + 1
    g = family_minimizer(spec)
    return g.n, g.edge_count


def bicyclic_pair(n: int) -> list[Graph]:
    """The B and P members with k = ceil(n/3) and middle parameter n + 1 - 2k
    that exist as simple graphs (n vertices, n + 1 edges)."""
    k = ceil(n / 3)
    q = n + 1 - 2 * k
    out = []
    for build in (b_graph, p_graph):
        try:
            out.append(build(k, q, k))
        except InfeasibleError:
            continue
    return out
