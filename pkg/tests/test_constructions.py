from collections import Counter
from math import comb

import pytest

from spectramin import constructions as C
from spectramin import fixtures
from spectramin.canonical import canonical_graph6, is_isomorphic
from spectramin.errors import InfeasibleError
from spectramin.graph import complement, is_connected
from spectramin.spectral import spectral_radius

N_MAX = 20


def _feasible_specs():
    """Every family member with n <= 20 the builders accept."""
    out = []
    for n in range(5, N_MAX + 1):
        out.append(f"nm1choose2:n={n}")
        if n % 2:
            out.append(f"joink2k1:n={n}")
            out += [f"g2g3odd:n={n},p={p}" for p in range(1, (n - 3) // 2 + 1)]
        else:
            if n >= 6:
                out.append(f"joinp4:n={n}")
                out += [f"g2g3even:n={n},p={p}" for p in range(1, (n - 4) // 2 + 1)]
                out += [f"halfsq:n={n},split={s}" for s in ("first", "alt")]
        if n >= 9:
            out += [f"nm3minusedge:n={n},variant={v}" for v in (1, 2)]
        if n % 3 == 0:
            out += [f"thirdsq:n={n},split={s}" for s in ("first", "alt")]
        out += [f"dense:n={n},p={p}" for p in range(1, n // 2 + 1)]
    for p in range(3, 8):
        for q in range(0, 6):
            for r in range(3, 8):
                if p + q + r - 1 <= N_MAX:
                    out.append(f"b:p={p},q={q},r={r}")
    return out


def _buildable(spec):
    try:
        return C.family_minimizer(spec)
    except InfeasibleError:
        return None


@pytest.mark.parametrize("spec", _feasible_specs())
def test_connected_with_expected_size(spec):
    g = _buildable(spec)
    if g is None:
        pytest.skip(f"{spec} has no regular-graph realization")
    assert is_connected(g)
    assert (g.n, g.edge_count) == C.expected_size(spec)


def test_infeasible_parameters_are_few_and_named():
    skipped = [s for s in _feasible_specs() if _buildable(s) is None]
    for s in skipped:
        with pytest.raises(InfeasibleError, match=r"\S"):
            C.family_minimizer(s)
    assert len(skipped) < 10


@pytest.mark.parametrize("n", range(4, N_MAX + 1))
def test_dense_degree_multiset(n):
    for p in range(1, n // 2 + 1):
        g = C.dense_minimizer(n, p)
        assert g.edge_count == comb(n, 2) - p
        assert Counter(g.degrees()) == Counter({n - 1: n - 2 * p, n - 2: 2 * p}) - Counter()


@pytest.mark.parametrize("tag", ["nm1choose2", "joink2k1", "joinp4", "g2g3even", "g2g3odd",
                                 "nm3minusedge"])
def test_almost_regular_families(tag):
    specs = [s for s in _feasible_specs() if s.startswith(tag + ":")]
    assert specs
    for s in specs:
        g = _buildable(s)
        if g is not None:
            assert g.irregularity == 1, s


def test_small_family_examples():
    assert C.dense_minimizer(6, 1).edge_count == 14
    cp6 = C.dense_minimizer(6, 3)
    assert cp6 == C.cocktail_party(6) and cp6.is_regular and cp6.max_degree == 4
    assert C.cocktail_party(6) == complement(C.perfect_matching(6))
    assert C.complete_bipartite(3, 4).edge_count == 12
    d = C.family_minimizer("g2g3even:n=8,p=1")
    assert (d.n, d.edge_count) == (8, 22)
    a = C.family_minimizer("nm1choose2:n=8")
    assert a.edge_count == 21 and sorted(a.degrees()) == [5] * 6 + [6, 6]
    assert C.regular_graph(6, 2) == C.cycle(6)
    assert C.regular_graph(5, 4) == C.complete(5)
    with pytest.raises(InfeasibleError):
        C.regular_graph(7, 3)


def test_b_and_p_graphs():
    for n in range(4, 16):
        for g in C.bicyclic_pair(n):
            assert (g.n, g.edge_count) == (n, n + 1)
            assert is_connected(g)
            assert sorted(g.degrees()) == [2] * (n - 2) + [3, 3]
    b = C.b_graph(3, 2, 3)
    assert is_isomorphic(b, fixtures.load("n7e8_two_triangles"))
    assert is_isomorphic(C.p_graph(3, 2, 3), fixtures.load("n7e8_theta"))
    for bad in [(2, 1, 3), (3, -1, 3)]:
        with pytest.raises(InfeasibleError):
            C.b_graph(*bad)
    with pytest.raises(InfeasibleError):
        C.p_graph(1, 1, 3)


def test_half_square_at_six_matches_minimizer_fixtures():
    drawn = {canonical_graph6(g) for g in fixtures.group("n6e8_")}
    built = {canonical_graph6(C.half_square_two_apex(6, s)) for s in ("first", "alt")}
    assert built == drawn


def test_half_square_contains_bipartite_minus_edge():
    for n in (6, 8):
        kme = C.complete_bipartite(n // 2, n // 2).with_edges(remove=[(0, n // 2)])
        assert is_isomorphic(C.half_square_two_apex(n, "alt"), kme)


def test_third_square_sizes():
    for n in (6, 9, 12, 15, 18):
        g = C.third_square_apex(n)
        assert (g.n, g.edge_count) == (n, n * n // 3 - 1)


def test_alon_pair():
    for t, n in [(2, 9), (2, 12), (3, 15), (4, 16), (4, 20)]:
        g1, g2 = C.alon_pair(t, n)
        assert (g1.n, g1.edge_count) == (g2.n, g2.edge_count)
        assert is_connected(g1) and is_connected(g2)
        assert g1.irregularity == 2 < g2.irregularity
        assert sorted(g2.degrees()) == [t] * (n - 1) + [2 * t + 4]
        assert spectral_radius(g1).rho >= t + 1
    with pytest.raises(InfeasibleError):
        C.alon_pair(5, 24)


def test_spec_parsing():
    spec = C.FamilySpec.parse("g2g3even:n=8,p=1")
    assert spec.family == "G2JoinG3Even"
    assert str(spec) == "g2g3even:n=8,p=1"
    assert C.FamilySpec.parse(str(spec)) == spec
    assert set(C.FAMILY_TAGS.values()) >= {"Path", "Cycle", "AlonPair", "HalfSquareTwoApex"}
    for bad in ["nosuch:n=3", "dense:n", "", "dense"]:
        with pytest.raises(InfeasibleError):
            C.family_minimizer(bad)


def test_complete_spectral_radius():
    for n in range(2, 10):
        assert spectral_radius(C.complete(n)).rho == pytest.approx(n - 1, abs=1e-10)
