import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from surfcensus import maps
from surfcensus.gluing import generate_maps
from surfcensus.maps import parse_surface
from surfcensus.rigidity import double_banana
from surfcensus.sparsity import (PreconditionFGNotAlpha, brute_force_sparse, face_count_identity,
                                 freedom, is_sparse, is_tight, subset_freedom)
from conftest import BASES, random_splits


def complete(n):
    return n, list(combinations(range(n), 2))


def naive_sparse(n, edges, alpha):
    # pure-python reference, independent of the numpy one
    lim = 3 if alpha > 3 else 1
    for r in range(lim, n + 1):
        for vs in combinations(range(n), r):
            if subset_freedom(edges, vs) < alpha:
                return False
    return True


@pytest.mark.parametrize("n, alpha, sparse", [
    (3, 6, True), (4, 6, True), (5, 6, False),
    (5, 3, True), (6, 3, True), (7, 3, False),
])
def test_complete_graphs(n, alpha, sparse):
    assert is_sparse(complete(n), alpha) == sparse
    assert brute_force_sparse(complete(n), alpha) == sparse


def test_tight_examples():
    assert is_tight(maps.octahedron(), 6)
    assert is_tight(maps.k6_projective(), 3)
    assert is_tight(double_banana(), 6)
    assert not is_tight(maps.k7_torus(), 6)
    assert freedom(maps.k7_torus()) == 0


def test_certificate_is_minimal():
    # K5 plus a pendant path: the only minimal violation is the K5
    n, edges = complete(5)
    edges = edges + [(4, 5), (5, 6)]
    ok, bad = is_sparse((7, edges), 6, certificate=True)
    assert not ok
    assert bad == [0, 1, 2, 3, 4]
    assert subset_freedom(edges, bad) < 6
    for v in bad:
        rest = [u for u in bad if u != v]
        assert len(rest) < 3 or subset_freedom(edges, rest) >= 6
    assert is_sparse(complete(4), 6, certificate=True) == (True, None)


def test_alpha_must_be_positive():
    with pytest.raises(ValueError):
        is_sparse(complete(3), 0)


@st.composite
def small_graphs(draw, nmax=9):
    n = draw(st.integers(1, nmax))
    pairs = list(combinations(range(n), 2))
    p = draw(st.floats(0.1, 0.9))
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    return n, [e for e in pairs if rng.random() < p]


@settings(max_examples=300, deadline=None)
@given(g=small_graphs(), alpha=st.sampled_from([1, 2, 3, 4, 5, 6]))
def test_orientation_test_matches_subset_enumeration(g, alpha):
    n, edges = g
    expect = naive_sparse(n, edges, alpha)
    assert brute_force_sparse(g, alpha) == expect
    ok, bad = is_sparse(g, alpha, certificate=True)
    assert ok == expect
    if not ok:
        assert subset_freedom(edges, bad) < alpha


@pytest.mark.parametrize("name", sorted(BASES))
def test_face_count_identity_on_split_maps(name):
    rng = random.Random(7)
    for k in range(6):
        g = random_splits(BASES[name](), k, rng)
        r = face_count_identity(g)
        assert r["holds"]
        assert r["lhs"] == r["walk_lhs"]


def test_face_count_identity_examples():
    # a torus map on K4 with a 9-gon and a triangle: both sides equal 6
    (g,) = generate_maps(parse_surface("T2"), 4, (9, 3))
    r = face_count_identity(g, 6)
    assert (r["lhs"], r["rhs"], r["holds"]) == (6, 6, True)
    r = face_count_identity(maps.k7_torus(), 0)
    assert (r["lhs"], r["rhs"]) == (0, 0)
    with pytest.raises(PreconditionFGNotAlpha):
        face_count_identity(maps.k7_torus(), 6)
