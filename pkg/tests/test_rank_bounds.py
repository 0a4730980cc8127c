import itertools
import logging
import math
import random

import numpy as np
import pytest

from capbound import (
    Graph,
    InapplicableError,
    NumericalError,
    SrgParams,
    cocktail_party,
    complete,
    cycle,
    distances,
    eval_on_matrix,
    fit_check,
    haemers_rank,
    hypercube,
    kneser,
    numeric_rank,
    petersen,
    rank_type_bound,
    shannon_exhaustive,
    shannon_greedy,
    spectrum_of,
    srg_parameters,
    srg_spectrum,
)

CATALOG = [
    cycle(5), cycle(7), cycle(8), cycle(10), cycle(11), cycle(12), cycle(13),
    petersen(), hypercube(3), hypercube(4), kneser(6, 2),
    cocktail_party(3), cocktail_party(4), complete(7),
]


def gq_2_4_point_graph() -> Graph:
    """Point graph of GQ(2,4): zeros of an elliptic quadric in GF(2)^6,
    adjacent when the connecting line stays on the quadric."""

    def q(x):
        return (
            x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + x[4] * x[5] + x[5] * x[5]
        ) % 2

    points = [
        x
        for x in itertools.product((0, 1), repeat=6)
        if any(x) and q(x) == 0
    ]
    assert len(points) == 27
    edges = []
    for i in range(27):
        for j in range(i + 1, 27):
            s = tuple((a + b) % 2 for a, b in zip(points[i], points[j]))
            if q(s) == 0:
                edges.append((i, j))
    return Graph.from_edges(27, edges)


def test_greedy_equals_exhaustive_everywhere():
    for g in CATALOG:
        spec = spectrum_of(g)
        if spec.d > 8:
            continue
        for k in range(1, spec.d + 1):
            a = shannon_greedy(spec, k)
            b = shannon_exhaustive(spec, k)
            assert a.rank == b.rank, (g.n, k)
            assert a.zero_indices == b.zero_indices, (g.n, k)


def test_shannon_normalization():
    for g in CATALOG:
        spec = spectrum_of(g)
        for k in range(1, spec.d + 1):
            sol = shannon_greedy(spec, k)
            total = sum(
                m * sol.poly(v) for v, m in zip(spec.values, spec.mults)
            )
            assert total == pytest.approx(1.0, abs=1e-9), (g.n, k)
            # zeros actually vanish
            for i in sol.zero_indices:
                assert abs(sol.poly(spec.values[i])) < 1e-9
            assert sol.rank == spec.n - sol.covered


def test_greedy_picks_largest_multiplicities():
    spec = spectrum_of(petersen())  # {3^1, 1^5, -2^4}
    sol = shannon_greedy(spec, 1)
    assert sol.zero_indices == (1,)  # multiplicity 5 wins
    assert sol.rank == 5
    sol2 = shannon_greedy(spec, 2)
    assert sol2.zero_indices == (1, 2)
    assert sol2.rank == 1


def test_tie_breaks_prefer_larger_eigenvalue():
    # C5 multiplicities tie at 2; the larger eigenvalue must carry the zero
    spec = spectrum_of(cycle(5))
    sol = shannon_greedy(spec, 1)
    assert sol.zero_indices == (1,)


def test_t_zero_descent_cocktail_party():
    # cocktail party K_{4x2}: zero at the 0 eigenvalue makes T vanish, so
    # the swap rule must move the zero down to -2
    spec = spectrum_of(cocktail_party(4))  # {6, 0^4, -2^3}
    sol = shannon_greedy(spec, 1)
    assert sol.zero_indices == (2,)
    assert sol.rank == 8 - 3
    assert shannon_exhaustive(spec, 1).rank == 5


def test_numeric_rank_against_lapack():
    rng = np.random.default_rng(7521)
    for _ in range(40):
        n = int(rng.integers(1, 25))
        r = int(rng.integers(0, n + 1))
        u = rng.normal(size=(n, r))
        v = rng.normal(size=(r, n))
        mat = u @ v if r else np.zeros((n, n))
        assert numeric_rank(mat) == np.linalg.matrix_rank(mat)


def test_numeric_rank_scaling_invariance():
    rng = np.random.default_rng(33)
    base = rng.normal(size=(8, 3)) @ rng.normal(size=(3, 8))
    for scale in (1e-6, 1.0, 1e6):
        assert numeric_rank(base * scale) == 3


def test_rank_bound_known_values_on_fixture(fixture_graph):
    g = fixture_graph("coxeter")
    for k, want in ((1, 20), (2, 13), (3, 7), (4, 1)):
        rep = rank_type_bound(g, k)
        assert rep.floor == want
        assert rep.method == "rank"
        assert not rep.bounds_theta


def test_rank_bound_numeric_cross_check(fixture_graph):
    # multiplicity count and explicit numeric rank of s_k(A) must agree on
    # walk-regular graphs
    g = fixture_graph("coxeter")
    a = g.adjacency_matrix().astype(float)
    spec = spectrum_of(g)
    for k in (1, 2, 3, 4):
        sol = shannon_greedy(spec, k)
        mat = eval_on_matrix(sol.poly, a)
        assert numeric_rank(mat) == sol.rank


def test_fit_check_properties():
    g = cycle(9)
    spec = spectrum_of(g)
    sol = shannon_greedy(spec, 2)
    chk = fit_check(g, 2, sol.poly)
    assert chk.ok
    # far entries are tiny, diagonal is bounded away from zero
    assert chk.max_far_entry < 1e-8
    assert chk.min_diag > chk.diag_threshold


def test_fitting_matrix_far_entries_vanish():
    # entries of s_k(A) at distance > k vanish because deg s_k = k
    for g, k in ((cycle(11), 3), (hypercube(4), 2), (petersen(), 1)):
        spec = spectrum_of(g)
        sol = shannon_greedy(spec, k)
        mat = eval_on_matrix(sol.poly, g.adjacency_matrix().astype(float))
        dm = distances(g)
        for u in range(g.n):
            assert abs(mat[u, u]) > 1e-12
            for v in range(g.n):
                if dm.dist[u][v] > k:
                    assert abs(mat[u, v]) < 1e-9


def test_rank_bound_spectrum_input_asserted():
    spec = srg_spectrum(SrgParams(27, 10, 1, 5))
    rep = rank_type_bound(spec, 1)
    assert rep.floor == 7
    assert rep.applicability.startswith("asserted")


def test_haemers_rank_on_gq24():
    g = gq_2_4_point_graph()
    assert srg_parameters(g) == SrgParams(27, 10, 1, 5)
    spec = spectrum_of(g)
    assert spec.values == pytest.approx((10.0, 1.0, -5.0), abs=1e-9)
    assert spec.mults == (1, 20, 6)
    rep = haemers_rank(g)
    assert rep.floor == 7
    assert "srg(27,10,1,5)" in rep.applicability


def test_haemers_rank_on_catalog_srgs():
    for g, want in ((petersen(), 5), (cycle(5), 3), (cocktail_party(4), 5)):
        rep = haemers_rank(g)
        assert rep.floor == want


def test_haemers_matches_rank_bound_at_k1():
    for g in (petersen(), cycle(5), kneser(6, 2)):
        assert haemers_rank(g).floor == rank_type_bound(g, 1).floor


def test_rank_bound_rejects_disconnected():
    with pytest.raises(Exception):
        rank_type_bound(Graph.from_edges(4, [(0, 1), (2, 3)]), 1)


def test_rank_bound_non_walk_regular_fit_fallback():
    # 3-regular graph with varying triangle counts: not 3-partially
    # walk-regular, so the k=3 bound must take the explicit-fit route or
    # declare itself inapplicable -- never silently use multiplicities
    h = Graph.from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
         (4, 5), (5, 6), (6, 7), (7, 4),
         (1, 5), (3, 7), (4, 6)],
    )
    try:
        rep = rank_type_bound(h, 3)
    except InapplicableError:
        return
    assert "explicit" in rep.applicability
    # whatever route it took, it must still be a genuine fitting matrix
    spec = spectrum_of(h)
    sol = shannon_greedy(spec, 3)
    chk = fit_check(h, 3, sol.poly)
    assert chk.ok


def test_index_zero_zero_is_allowed_and_logged(caplog):
    # C10 at k=5 drives the greedy descent into using the principal
    # eigenvalue as a zero; the solution must be accepted and noted
    spec = spectrum_of(cycle(10))
    with caplog.at_level(logging.INFO, logger="capbound.rank_bounds"):
        sol = shannon_greedy(spec, 5)
    assert 0 in sol.zero_indices
    assert sol.rank == 10 - sol.covered
    assert any("valency eigenvalue" in rec.message for rec in caplog.records)


def test_cycle_rank_row_values():
    # spot rows: rank-type bound for cycle powers
    for n, k, want in ((8, 4, 1), (11, 4, 3), (12, 5, 3), (15, 4, 7), (19, 5, 9)):
        rep = rank_type_bound(cycle(n), k)
        assert rep.floor == want, (n, k)
