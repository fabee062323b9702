import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from surfcensus import maps
from surfcensus.rigidity import (DEFAULT_SEED, double_banana, generic_rank_probe, probe_census,
                                 rank_mod_p)
from conftest import BASES, random_splits


def test_rank_mod_p():
    assert rank_mod_p([[1, 2], [2, 4]]) == 1
    assert rank_mod_p([[1, 0], [0, 1], [1, 1]]) == 2
    assert rank_mod_p([]) == 0


@pytest.mark.parametrize("graph, rank, bound, minimal", [
    (maps.k3_sphere(), 3, 3, True),
    (maps.octahedron(), 12, 12, True),
    (maps.k6_projective(), 12, 12, False),   # rigid with three edges to spare
    (double_banana(), 17, 18, False),        # right count, still flexible
    ((5, list(combinations(range(5), 2))), 9, 9, False),
])
def test_known_ranks(graph, rank, bound, minimal):
    pr = generic_rank_probe(graph)
    assert (pr.rank, pr.bound, pr.minimally_rigid) == (rank, bound, minimal)


def test_probe_is_deterministic():
    a = generic_rank_probe(maps.k7_torus(), trials=3)
    b = generic_rank_probe(maps.k7_torus(), trials=3)
    assert a.ranks == b.ranks and a.seed == DEFAULT_SEED
    assert 0 < a.failure_probability < 1e-15


def test_probe_rejects_bad_input():
    with pytest.raises(ValueError):
        generic_rank_probe((2, [(0, 1)]))
    with pytest.raises(ValueError):
        generic_rank_probe((3, [(0, 1), (1, 0), (1, 2)]))


def test_probe_census_lists_short_graphs():
    rep = probe_census([maps.octahedron(), double_banana()])
    assert rep["short"] == [1]
    assert not rep["all_minimally_rigid"]


@settings(max_examples=60, deadline=None)
@given(base=st.sampled_from(["S2", "oct"]), seed=st.integers(0, 10 ** 6), k=st.integers(0, 5))
def test_splits_keep_sphere_triangulations_minimally_rigid(base, seed, k):
    g = random_splits(BASES[base](), k, random.Random(seed))
    pr = generic_rank_probe(g)
    assert pr.rank <= pr.bound
    assert pr.minimally_rigid
