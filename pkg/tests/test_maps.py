import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from surfcensus import maps
from surfcensus.maps import (DanglingDart, DisconnectedGraph, MapError, NonInvolution, NotSimple,
                             ParseError, build_graph, canonical_code, from_canonical_tuple,
                             canonical_tuple, from_edges, from_polygons, isomorphic, parse_surface,
                             read_map_json)
from conftest import BASES, random_splits


def orientable_by_brute_force(g):
    for flips in product((1, -1), repeat=g.n):
        if all(s * flips[u] * flips[w] == 1 for (u, w), s in zip(g.ends, g.signs)):
            return True
    return False


@pytest.mark.parametrize("make, chi, orientable, nfaces", [
    (maps.k3_sphere, 2, True, 2),
    (maps.k3_projective, 1, False, 1),
    (maps.k7_torus, 0, True, 14),
    (maps.octahedron, 2, True, 8),
    (maps.tetrahedron, 2, True, 4),
    (maps.k6_projective, 1, False, 10),
])
def test_fixture_surfaces(make, chi, orientable, nfaces):
    g = make()
    assert g.euler_char() == chi
    assert g.is_orientable() == orientable
    assert len(g.faces) == nfaces


def test_bipyramid_counts():
    for k in range(3, 8):
        g = maps.bipyramid(k)
        assert (g.n, g.num_edges, len(g.faces)) == (k + 2, 3 * k, 2 * k)
        assert g.surface() == maps.SPHERE


def test_every_dart_state_in_one_face():
    g = maps.k6_projective()
    for k, w in enumerate(g.faces):
        for d, e in zip(w.darts, w.eps):
            assert g.face_of_state(d, e) == k
    assert sum(w.length for w in g.faces) == 2 * g.num_edges
    assert len(g.edge_faces) == g.num_edges


def test_surface_names():
    assert parse_surface("S2").euler_char == 2
    assert parse_surface("K2") == maps.KLEIN_BOTTLE
    assert parse_surface("or:2").euler_char == -2
    assert parse_surface("nor:3") == maps.SurfaceClass(-1, False)
    assert parse_surface("nor:1") == maps.PROJECTIVE_PLANE
    assert parse_surface("T2").reduced_genus == 1
    assert parse_surface("P2").reduced_genus * 2 == 1
    with pytest.raises(ParseError):
        parse_surface("banana")
    with pytest.raises(ParseError):
        parse_surface("nor:0")


def test_json_round_trip_and_strictness():
    g = maps.k7_torus()
    h = read_map_json(g.to_json())
    assert h == g
    data = g.to_json_dict()
    data["comment"] = "x"
    with pytest.raises(ParseError):
        read_map_json(json.dumps(data))
    assert read_map_json(json.dumps(data), lenient=True) == g
    with pytest.raises(ParseError):
        read_map_json("{not json")
    with pytest.raises(ParseError):
        read_map_json('{"vertices": 3}')


def test_construction_errors():
    with pytest.raises(NonInvolution):
        build_graph([[0, 1], [2]], [1, 2, 0], [1, 1, 1])
    with pytest.raises(DanglingDart):
        build_graph([[0]], [5, 0], [1, 1])
    with pytest.raises(DanglingDart):
        from_edges(2, [[0, 1, 1]], [[0], []])
    with pytest.raises(DisconnectedGraph):
        from_edges(4, [[0, 1, 1], [2, 3, 1]], [[0], [1], [2], [3]])
    with pytest.raises(NotSimple):
        from_edges(2, [[0, 1, 1], [0, 1, 1]], [[0, 2], [1, 3]])
    with pytest.raises(MapError):
        from_edges(2, [[0, 1, 2]], [[0], [1]])
    # the same tables are fine once simplicity is waived
    g = from_edges(2, [[0, 1, 1], [0, 1, 1]], [[0, 2], [1, 3]], simple=False)
    assert g.num_edges == 2


def test_build_graph_renumbers_darts():
    # K3 on the sphere with darts paired out of order
    g = build_graph([[0, 5], [1, 2], [3, 4]], [1, 0, 3, 2, 5, 4], [1] * 6)
    assert isomorphic(g, maps.k3_sphere())


def test_from_polygons_nonorientable():
    # K6 in the projective plane from its ten triangles
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    g = from_polygons(tris)
    assert g.surface() == maps.PROJECTIVE_PLANE
    assert isomorphic(g, maps.k6_projective())


def _relabelled(g, rng):
    vp = list(range(g.n))
    ep = list(range(g.num_edges))
    rng.shuffle(vp)
    rng.shuffle(ep)
    sw = [rng.random() < 0.5 for _ in range(g.num_edges)]
    h = g.relabel(vp, ep, sw)
    for v in range(h.n):
        if rng.random() < 0.5:
            h = h.flip_vertex(v)
    if rng.random() < 0.5:
        h = h.mirror()
    return h


@settings(max_examples=60, deadline=None)
@given(base=st.sampled_from(sorted(BASES)), seed=st.integers(0, 10 ** 6), k=st.integers(0, 4))
def test_canonical_code_is_invariant(base, seed, k):
    rng = random.Random(seed)
    g = random_splits(BASES[base](), k, rng)
    h = _relabelled(g, rng)
    assert canonical_code(g) == canonical_code(h)
    assert h.surface() == g.surface()
    assert sorted(h.face_lengths()) == sorted(g.face_lengths())


@settings(max_examples=40, deadline=None)
@given(base=st.sampled_from(sorted(BASES)), seed=st.integers(0, 10 ** 6), k=st.integers(0, 3))
def test_orientability_matches_brute_force(base, seed, k):
    g = random_splits(BASES[base](), k, random.Random(seed))
    assert g.is_orientable() == orientable_by_brute_force(g)
    if g.is_orientable():
        flips = g.vertex_flips
        h = g
        for v in range(g.n):
            if flips[v] < 0:
                h = h.flip_vertex(v)
        assert all(s == 1 for s in h.signs)


@settings(max_examples=40, deadline=None)
@given(base=st.sampled_from(sorted(BASES)), seed=st.integers(0, 10 ** 6), k=st.integers(0, 3))
def test_canonical_tuple_rebuilds_an_isomorphic_map(base, seed, k):
    g = random_splits(BASES[base](), k, random.Random(seed))
    h = from_canonical_tuple(canonical_tuple(g))
    assert canonical_code(h) == canonical_code(g)
    assert read_map_json(g.to_json()) == g


def test_codes_separate_nonisomorphic_maps():
    gs = [maps.k3_sphere(), maps.k3_projective(), maps.octahedron(), maps.bipyramid(5),
          maps.k7_torus(), maps.k6_projective(), maps.tetrahedron()]
    assert len({canonical_code(g) for g in gs}) == len(gs)
    # same abstract graph, different embeddings
    assert maps.k3_sphere().abstract_edges() == maps.k3_projective().abstract_edges()
    assert not isomorphic(maps.k3_sphere(), maps.k3_projective())


def test_degree_signature():
    assert maps.octahedron().degree_signature() == "4^6"
    assert maps.bipyramid(5).degree_signature() == "5^2 4^5"
    assert maps.k3_sphere().degree_signature() == "2^3"


def test_square_bipyramid_is_the_octahedron():
    assert isomorphic(maps.bipyramid(4), maps.octahedron())
