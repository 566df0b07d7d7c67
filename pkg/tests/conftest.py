import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from spectramin.graph import Graph, make_graph  # noqa: E402
from spectramin.search import rho_min_table  # noqa: E402

settings.register_profile("default", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DESK_N = 8


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return make_graph(n, [(perm[a], perm[b]) for a, b in edges | set(extra)])


@st.composite
def any_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


def random_connected(rng: random.Random, min_n=2, max_n=8, density=None) -> Graph:
    n = rng.randint(min_n, max_n)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    p = rng.random() if density is None else density
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.add((a, b))
    perm = list(range(n))
    rng.shuffle(perm)
    return make_graph(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture(scope="session")
def desk_table():
    """Exhaustive reports for every feasible (n, e) with n <= 8, keyed by (n, e)."""
    return {(r.n, r.e): r for r in rho_min_table(DESK_N).reports}
