import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import any_graphs
from spectramin.errors import GraphError
from spectramin.graph import (Graph, complement, components, disjoint_union, is_connected, join,
                              make_graph)


def _check_symmetric(g: Graph) -> None:
    a = g.adjacency()
    assert np.array_equal(a, a.T)
    assert not np.any(np.diag(a))
    g.validate()


def test_basic_queries():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 1)])
    assert g.edge_count == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.max_degree == 2 and g.min_degree == 1 and g.irregularity == 1
    assert not g.is_regular
    assert g.neighbors(1) == [0, 2]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert (0, 2) in g.non_edges()


@pytest.mark.parametrize("n, edges", [
    (3, [(0, 0)]),
    (3, [(0, 3)]),
    (0, []),
    (65, []),
])
def test_invalid_construction(n, edges):
    with pytest.raises(GraphError):
        make_graph(n, edges)


def test_from_rows_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_rows([0b10, 0b00])


def test_components_and_connectivity():
    g = make_graph(5, [(0, 1), (3, 4)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(make_graph(1))


@given(any_graphs(), any_graphs())
def test_join_edge_count(g, h):
    if g.n + h.n > 64:
        return
    j = join(g, h)
    assert j.edge_count == g.edge_count + h.edge_count + g.n * h.n
    assert disjoint_union(g, h).edge_count == g.edge_count + h.edge_count
    _check_symmetric(j)


@given(any_graphs())
def test_complement_involution(g):
    c = complement(g)
    assert c.edge_count + g.edge_count == g.n * (g.n - 1) // 2
    assert complement(c) == g


@given(any_graphs(min_n=2), st.randoms(use_true_random=False))
def test_degree_sum_and_max(g, rnd):
    d = g.degrees()
    assert sum(d) == 2 * g.edge_count
    assert max(d) <= g.n - 1
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert sorted(g.relabel(perm).degrees()) == sorted(d)


def test_random_operation_sequences_keep_symmetry():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 10)
        g = make_graph(n)
        for _ in range(30):
            op = rng.randrange(5)
            if op == 0:
                u, v = rng.sample(range(n), 2)
                g = g.with_edges(add=[(u, v)])
            elif op == 1 and g.edge_count:
                g = g.with_edges(remove=[rng.choice(g.edges())])
            elif op == 2:
                perm = list(range(n))
                rng.shuffle(perm)
                g = g.relabel(perm)
            elif op == 3:
                g = complement(g)
            else:
                keep = sorted(rng.sample(range(n), rng.randint(1, n)))
                _check_symmetric(g.induced(keep))
            _check_symmetric(g)


def test_relabel_rejects_non_permutation():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 1)]).relabel([0, 0, 1])
