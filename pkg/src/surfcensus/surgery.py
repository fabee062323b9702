"""Edge contraction, vertex splitting and subgraph restriction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .maps import EmbeddedGraph, MapError, from_edges


class NotContractible(MapError):
    pass


class InvalidSplit(MapError):
    pass


class DegreeTooLow(MapError):
    pass


# ---------------------------------------------------------------------------
# contraction


def _apex(g: EmbeddedGraph, face: int, x: int, y: int) -> int | None:
    vs = g.face_vertices[face]
    if len(vs) != 3:
        return None
    rest = [v for v in vs if v != x and v != y]
    return rest[0] if len(rest) == 1 else None


def contraction_obstruction(g: EmbeddedGraph, e: int) -> str | None:
    """Why edge ``e`` cannot be contracted, or None if it can.

    An edge ``xy`` is contractible when its two sides are distinct facial
    triangles ``xya`` and ``xyb`` with ``a != b``, ``x`` and ``y`` have no
    common neighbour besides ``a`` and ``b`` (so ``xy`` lies on no other
    3-cycle), and the result keeps at least three vertices.
    """
    x, y = g.ends[e]
    fa, fb = g.edge_faces[e]
    if fa == fb:
        return "one face on both sides"
    a, b = _apex(g, fa, x, y), _apex(g, fb, x, y)
    if a is None or b is None:
        return "nontriangular face"
    if a == b:
        return "both sides share an apex"
    if len(g.adjacency[x] & g.adjacency[y]) != 2:
        return "extra 3-cycle"
    if g.n - 1 < 3:
        return "too few vertices"
    return None


def contractible_edges(g: EmbeddedGraph) -> list[int]:
    return [e for e in range(g.num_edges) if contraction_obstruction(g, e) is None]


def _rebuild(g: EmbeddedGraph, rot: Sequence[Sequence[int]], drop_edges: Iterable[int],
             signs: Sequence[int], extra=()) -> EmbeddedGraph:
    """Assemble a graph from darts placed in new rotations.

    ``rot[v]`` lists the darts at new vertex ``v``; old darts keep their
    edge.  New edges in ``extra`` are ``(sign, key_u, key_w)`` and appear in
    ``rot`` under those keys.
    """
    drop = set(drop_edges)
    owner = {d: v for v, r in enumerate(rot) for d in r}
    keep = [i for i in range(g.num_edges) if i not in drop]
    edges = []
    dart = {}
    for i in keep:
        j = len(edges)
        edges.append([owner[2 * i], owner[2 * i + 1], signs[i]])
        dart[2 * i], dart[2 * i + 1] = 2 * j, 2 * j + 1
    for s, ku, kw in extra:
        j = len(edges)
        edges.append([owner[ku], owner[kw], s])
        dart[ku], dart[kw] = 2 * j, 2 * j + 1
    return from_edges(len(rot), edges, [[dart[d] for d in r] for r in rot])


def contract_edge(g: EmbeddedGraph, e: int) -> EmbeddedGraph:
    """Contract a contractible edge ``xy`` onto ``x``.

    The two facial triangles collapse; vertex ``y`` disappears and the
    vertices above it shift down by one.
    """
    why = contraction_obstruction(g, e)
    if why is not None:
        raise NotContractible(f"edge {e}: {why}")
    dx = 2 * e
    x, y = g.tail[dx], g.tail[dx ^ 1]
    if g.signs[e] < 0:
        g = g.flip_vertex(y)
    rx, ry = g.rotation[x], g.rotation[y]
    ix, iy = g.pos[dx], g.pos[dx ^ 1]
    arc_x = [rx[(ix + k) % len(rx)] for k in range(1, len(rx))]
    arc_y = [ry[(iy + k) % len(ry)] for k in range(1, len(ry))]
    a, b = g.head(arc_x[0]), g.head(arc_x[-1])
    if g.head(arc_y[0]) != b or g.head(arc_y[-1]) != a:
        raise MapError("rotation at the contracted edge is inconsistent with its faces")
    gone = {e, arc_y[0] >> 1, arc_y[-1] >> 1}
    merged = arc_x + arc_y[1:-1]
    rot = []
    for v in range(g.n):
        if v == y:
            continue
        if v == x:
            rot.append(merged)
        else:
            rot.append([d for d in g.rotation[v] if (d >> 1) not in gone])
    return _rebuild(g, rot, gone, g.signs)


def split_vertex(g: EmbeddedGraph, v: int, d1: int, d2: int) -> EmbeddedGraph:
    """Split ``v`` along the cut darts ``d1`` and ``d2``.

    ``v`` keeps the rotation arc from ``d1`` to ``d2`` (inclusive, in the
    direction of its rotation); a new vertex ``n`` takes the rest of the
    rotation and is joined to ``v`` and to the heads of ``d1`` and ``d2``.
    Two new triangular faces appear.  This inverts :func:`contract_edge`:
    contracting the new edge ``v n`` gives back ``g``.
    """
    rv = g.rotation[v]
    if g.tail[d1] != v or g.tail[d2] != v:
        raise InvalidSplit("cut darts must both start at the split vertex")
    a, b = g.head(d1), g.head(d2)
    if d1 == d2 or a == b:
        raise InvalidSplit("cut darts lead to the same neighbour; the split would add parallel edges")
    i1, i2 = g.pos[d1], g.pos[d2]
    k = len(rv)
    arc = [rv[(i1 + t) % k] for t in range((i2 - i1) % k + 1)]
    rest = [rv[(i2 + t) % k] for t in range(1, (i1 - i2) % k)]
    y = g.n
    sa, sb = g.signs[d1 >> 1], g.signs[d2 >> 1]
    # new darts: xy, yx, ya, ay, yb, by (keys past the old dart range)
    base = 2 * g.num_edges
    XY, YX, YA, AY, YB, BY = range(base, base + 6)
    rot = [list(r) for r in g.rotation]
    rot[v] = [XY] + arc
    rot.append([YX, YB] + rest + [YA])

    def insert_next_to(w, target, new, after):
        r = rot[w]
        j = r.index(target)
        r.insert(j + 1 if after else j, new)

    # at a the new dart follows the dart towards v when the edge is untwisted
    insert_next_to(a, d1 ^ 1, AY, after=(sa > 0))
    insert_next_to(b, d2 ^ 1, BY, after=(sb < 0))
    extra = [(1, XY, YX), (sa, YA, AY), (sb, YB, BY)]
    try:
        return _rebuild(g, rot, (), g.signs, extra)
    except MapError as exc:  # pragma: no cover - guarded by the checks above
        raise InvalidSplit(str(exc)) from exc


def split_choices(g: EmbeddedGraph) -> list[tuple[int, int, int]]:
    """All valid ``(v, d1, d2)`` arguments for :func:`split_vertex`."""
    out = []
    for v in range(g.n):
        for d1 in g.rotation[v]:
            for d2 in g.rotation[v]:
                if d1 != d2 and g.head(d1) != g.head(d2):
                    out.append((v, d1, d2))
    return out


# ---------------------------------------------------------------------------
# subgraphs


@dataclass(frozen=True)
class SubgraphEmbedding:
    """A subgraph ``K`` of an embedded graph with the faces it inherits.

    ``face_groups`` partitions the parent faces: two faces share a group
    when they are joined across a removed edge.  Each group is a face of K.
    """

    parent: EmbeddedGraph = field(repr=False)
    kept_edges: frozenset
    vertices: frozenset
    induced_rotation: dict = field(repr=False)
    face_groups: tuple
    group_of_face: tuple = field(repr=False)

    @property
    def removed_edges(self) -> frozenset:
        return frozenset(range(self.parent.num_edges)) - self.kept_edges

    def degree(self, v: int) -> int:
        return len(self.induced_rotation.get(v, ()))


def restrict_to_subgraph(g: EmbeddedGraph, kept_edges: Iterable[int],
                         strict: bool = False) -> SubgraphEmbedding:
    kept = frozenset(kept_edges)
    if not kept:
        raise ValueError("the subgraph needs at least one edge")
    rot = {}
    for v in range(g.n):
        r = tuple(d for d in g.rotation[v] if (d >> 1) in kept)
        if r:
            rot[v] = r
    if strict:
        low = [v for v, r in rot.items() if len(r) < 2]
        if low:
            raise DegreeTooLow(f"vertices of degree 1 in the subgraph: {low}")
    nf = len(g.faces)
    parent = list(range(nf))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(g.num_edges):
        if i not in kept:
            fa, fb = g.edge_faces[i]
            ra, rb = find(fa), find(fb)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for f in range(nf):
        groups.setdefault(find(f), []).append(f)
    ordered = sorted(tuple(v) for v in groups.values())
    gof = [0] * nf
    for k, grp in enumerate(ordered):
        for f in grp:
            gof[f] = k
    return SubgraphEmbedding(g, kept, frozenset(rot), rot, tuple(ordered), tuple(gof))
