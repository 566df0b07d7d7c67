import random

import numpy as np
import pytest

from conftest import random_connected
from spectramin.constructions import b_graph, complete, cycle, path
from spectramin.enumeration import enumerate_connected
from spectramin.errors import GraphError
from spectramin.graph import make_graph
from spectramin.spectral import char_poly, spectral_radius
from spectramin.transforms import (RotationSpec, SwitchSpec, apply_transform, find_internal_paths,
                                   hypothesis_rotation, hypothesis_switch, kelmans, local_switch,
                                   on_internal_path, parse_transform, rotate_edge,
                                   subdivide_internal)

CASES = 1000


def _rho(g) -> float:
    return float(np.linalg.eigvalsh(g.adjacency())[-1]) if g.edge_count else 0.0


def _random_rotation(rng, g):
    options = [(r, s, t) for r, s in g.edges() + [(b, a) for a, b in g.edges()]
               for t in range(g.n) if t not in (r, s) and not g.has_edge(r, t)]
    return RotationSpec(*rng.choice(options)) if options else None


def _random_switch(rng, g):
    edges = g.edges()
    for _ in range(50):
        (s, t), (u, v) = rng.sample(edges, 2) if len(edges) > 1 else (edges[0], edges[0])
        if rng.random() < 0.5:
            u, v = v, u
        if len({s, t, u, v}) == 4 and not g.has_edge(s, v) and not g.has_edge(t, u):
            return SwitchSpec(s, t, u, v)
    return None


def test_small_examples():
    p4 = path(4)
    assert spectral_radius(p4).rho == pytest.approx(1.6180339887, abs=1e-9)
    rotated = rotate_edge(p4, RotationSpec(r=2, s=3, t=0))
    assert spectral_radius(rotated, require_connected=False).rho > spectral_radius(p4).rho
    assert _rho(kelmans(p4, 1, 2)) == pytest.approx(3 ** 0.5, abs=1e-9)
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    # x_t < x_s: t is a leaf, s is the centre
    assert not hypothesis_rotation(star, RotationSpec(r=1, s=0, t=2))


def test_structural_preconditions():
    g = path(4)
    for spec in [RotationSpec(0, 2, 3), RotationSpec(0, 1, 1), RotationSpec(1, 0, 2)]:
        with pytest.raises(GraphError):
            rotate_edge(g, spec)
    with pytest.raises(GraphError):
        local_switch(g, SwitchSpec(0, 1, 1, 2))
    with pytest.raises(GraphError):
        kelmans(g, 1, 1)
    with pytest.raises(GraphError):
        subdivide_internal(cycle(5), 0, 1)


def test_kelmans_monotone():
    rng = random.Random(101)
    for _ in range(CASES):
        g = random_connected(rng, 2, 8)
        u, v = rng.sample(range(g.n), 2)
        h = kelmans(g, u, v)
        assert (h.n, h.edge_count) == (g.n, g.edge_count)
        assert _rho(h) >= _rho(g) - 1e-9


def test_rotation_monotone_under_hypothesis():
    rng = random.Random(202)
    held = 0
    while held < CASES:
        g = random_connected(rng, 3, 8)
        spec = _random_rotation(rng, g)
        if spec is None:
            continue
        h = rotate_edge(g, spec)
        assert (h.n, h.edge_count) == (g.n, g.edge_count)
        if hypothesis_rotation(g, spec):
            held += 1
            gap = _rho(h) - _rho(g)
            if gap <= 1e-10:
                assert char_poly(h).largest_root_mp() > char_poly(g).largest_root_mp()


def test_switch_monotone_under_hypothesis():
    rng = random.Random(303)
    held = 0
    while held < CASES:
        g = random_connected(rng, 4, 8)
        spec = _random_switch(rng, g)
        if spec is None:
            continue
        h = local_switch(g, spec)
        assert (h.n, h.edge_count) == (g.n, g.edge_count)
        if hypothesis_switch(g, spec):
            held += 1
            gap = _rho(h) - _rho(g)
            assert gap >= -1e-9
            if abs(gap) <= 1e-9:
                x = spectral_radius(g).eigenvector
                assert abs(x[spec.s] - x[spec.u]) <= 1e-8 and abs(x[spec.v] - x[spec.t]) <= 1e-8


def test_subdivision_never_increases_on_corpus():
    checked = 0
    for n in range(4, 9):
        for e in range(n, n * (n - 1) // 2 + 1):
            for g in enumerate_connected(n, e):
                before = _rho(g)
                seen = set()
                for p in find_internal_paths(g):
                    for v, w in zip(p, p[1:]):
                        if (min(v, w), max(v, w)) in seen:
                            continue
                        seen.add((min(v, w), max(v, w)))
                        h = subdivide_internal(g, v, w)
                        assert (h.n, h.edge_count) == (g.n + 1, g.edge_count + 1)
                        assert _rho(h) <= before + 1e-9
                        checked += 1
    assert checked > 1000


def test_internal_paths():
    assert find_internal_paths(b_graph(3, 2, 3)) == [(0, 1, 2, 0), (0, 3, 4), (4, 5, 6, 4)]
    assert len(find_internal_paths(complete(4))) == 6
    assert find_internal_paths(path(5)) == []
    assert on_internal_path(complete(4), 0, 1)
    h = subdivide_internal(complete(4), 0, 1)
    assert _rho(h) == pytest.approx(2.8558, abs=1e-4)


def test_parse_and_apply():
    assert parse_transform("rotate:r=1,s=0,t=3") == ("rotate", {"r": 1, "s": 0, "t": 3})
    g = path(4)
    assert apply_transform(g, "kelmans:u=1,v=2") == kelmans(g, 1, 2)
    for bad in ["twist:a=1", "rotate:r=1,s=0", "rotate:r=x,s=0,t=3", "kelmans"]:
        with pytest.raises(GraphError):
            parse_transform(bad)
