import random

import pytest
from hypothesis import given, settings, strategies as st

from surfcensus import maps
from surfcensus.maps import canonical_code, isomorphic
from surfcensus.surgery import (DegreeTooLow, InvalidSplit, NotContractible, contract_edge,
                                contractible_edges, contraction_obstruction, restrict_to_subgraph,
                                split_choices, split_vertex)
from conftest import BASES, random_splits


@pytest.mark.parametrize("make, count", [
    (maps.k3_sphere, 0),        # too few vertices
    (maps.tetrahedron, 6),
    (maps.octahedron, 12),      # adjacent vertices share exactly the two apexes
    (lambda: maps.bipyramid(5), 15),
    (maps.k7_torus, 0),         # every edge lies on extra 3-cycles
])
def test_contractible_edge_counts(make, count):
    assert len(contractible_edges(make())) == count


def test_octahedron_contracts_to_the_five_vertex_triangulation():
    g = maps.octahedron()
    for e in range(g.num_edges):
        h = contract_edge(g, e)
        assert isomorphic(h, maps.bipyramid(3))


def test_tetrahedron_contracts_to_k3():
    assert isomorphic(contract_edge(maps.tetrahedron(), 0), maps.k3_sphere())


def test_obstruction_reasons():
    assert contraction_obstruction(maps.k3_sphere(), 0) == "both sides share an apex"
    assert contraction_obstruction(maps.k3_projective(), 0) == "one face on both sides"
    assert contraction_obstruction(maps.k7_torus(), 0) == "extra 3-cycle"
    with pytest.raises(NotContractible):
        contract_edge(maps.k7_torus(), 0)


def test_split_adds_one_vertex_three_edges_two_triangles():
    g = maps.octahedron()
    v, d1, d2 = split_choices(g)[0]
    h = split_vertex(g, v, d1, d2)
    assert (h.n, h.num_edges, len(h.faces)) == (g.n + 1, g.num_edges + 3, len(g.faces) + 2)
    assert h.freedom() == g.freedom()
    assert sorted(h.face_lengths()) == sorted(g.face_lengths() + [3, 3])


def test_invalid_splits():
    g = maps.octahedron()
    d = g.rotation[0][0]
    with pytest.raises(InvalidSplit):
        split_vertex(g, 0, d, d)
    with pytest.raises(InvalidSplit):
        split_vertex(g, 1, d, g.rotation[1][0])


@settings(max_examples=150, deadline=None)
@given(base=st.sampled_from(sorted(BASES)), seed=st.integers(0, 10 ** 6), k=st.integers(0, 3))
def test_contracting_the_new_edge_undoes_a_split(base, seed, k):
    rng = random.Random(seed)
    g = random_splits(BASES[base](), k, rng)
    v, d1, d2 = rng.choice(split_choices(g))
    h = split_vertex(g, v, d1, d2)
    assert h.surface() == g.surface()
    assert h.freedom() == g.freedom()
    e = h.edge_between(v, h.n - 1)
    # the new edge may sit on an extra 3-cycle; the identity holds when it is contractible
    if contraction_obstruction(h, e) is None:
        assert canonical_code(contract_edge(h, e)) == canonical_code(g)


@settings(max_examples=80, deadline=None)
@given(base=st.sampled_from(sorted(BASES)), seed=st.integers(0, 10 ** 6), k=st.integers(1, 4))
def test_contraction_keeps_surface_and_freedom(base, seed, k):
    rng = random.Random(seed)
    g = random_splits(BASES[base](), k, rng)
    for e in contractible_edges(g):
        h = contract_edge(g, e)
        assert h.surface() == g.surface()
        assert h.freedom() == g.freedom()
        assert sorted(h.face_lengths() + [3, 3]) == sorted(g.face_lengths())


def test_restrict_to_cycle_on_sphere():
    g = maps.octahedron()
    # an equator of the octahedron: a 4-cycle through the neighbours of vertex 0
    rot = g.rotation[0]
    ring = [g.head(d) for d in rot]
    cyc = [g.edge_between(ring[i], ring[(i + 1) % 4]) for i in range(4)]
    k = restrict_to_subgraph(g, cyc, strict=True)
    assert len(k.face_groups) == 2
    assert sorted(len(grp) for grp in k.face_groups) == [4, 4]
    assert all(k.degree(v) == 2 for v in k.vertices)
    with pytest.raises(DegreeTooLow):
        restrict_to_subgraph(g, cyc[:3], strict=True)
    with pytest.raises(ValueError):
        restrict_to_subgraph(g, [])


def test_restrict_to_whole_graph_keeps_faces():
    g = maps.k7_torus()
    k = restrict_to_subgraph(g, range(g.num_edges))
    assert k.face_groups == tuple((f,) for f in range(len(g.faces)))
    assert not k.removed_edges
