"""Signed rotation systems for graphs cellularly embedded in closed surfaces.

An :class:`EmbeddedGraph` stores ``2e`` darts; darts ``2i`` and ``2i + 1``
are the two ends of edge ``i``.  Each vertex carries a cyclic order of its
darts and each edge a sign in ``{+1, -1}``.  A sign of ``-1`` means the local
orientation flips when crossing the edge, which is how nonorientable surfaces
are encoded.

Faces are traced on states ``(dart, eps)`` where ``eps`` is the current local
orientation.  State index ``2 * dart + (eps == -1)`` is used throughout.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class MapError(ValueError):
    """Base class for malformed rotation system input."""


class NonInvolution(MapError):
    pass


class DanglingDart(MapError):
    pass


class DisconnectedGraph(MapError):
    pass


class NotSimple(MapError):
    pass


class ParseError(MapError):
    pass


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of a face.

    ``darts`` are the darts left along the walk, ``eps`` the local
    orientation used when leaving each one.  An edge whose two sides lie on
    the same face shows up twice, so ``length`` counts it twice.
    """

    darts: tuple[int, ...]
    eps: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)


@dataclass(frozen=True)
class SurfaceClass:
    euler_char: int
    orientable: bool

    @property
    def genus(self) -> int:
        """Handles when orientable, cross-caps otherwise."""
        if self.orientable:
            return (2 - self.euler_char) // 2
        return 2 - self.euler_char

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_char

    @property
    def reduced_genus(self) -> Fraction:
        return Fraction(2 - self.euler_char, 2)

    @property
    def mu(self) -> int:
        return 2 if self.orientable else 1

    @property
    def name(self) -> str:
        return surface_name(self)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "euler_char": self.euler_char,
            "orientable": self.orientable,
            "genus": self.genus,
            "reduced_genus": str(self.reduced_genus),
            "mu": self.mu,
        }


SPHERE = SurfaceClass(2, True)
PROJECTIVE_PLANE = SurfaceClass(1, False)
TORUS = SurfaceClass(0, True)
KLEIN_BOTTLE = SurfaceClass(0, False)

_NAMED = {"S2": SPHERE, "P2": PROJECTIVE_PLANE, "T2": TORUS, "K2": KLEIN_BOTTLE}


def parse_surface(text: str) -> SurfaceClass:
    """Parse ``S2``, ``P2``, ``T2``, ``K2``, ``or:g`` or ``nor:k``."""
    key = text.strip()
    if key.upper() in _NAMED:
        return _NAMED[key.upper()]
    kind, _, num = key.partition(":")
    try:
        g = int(num)
    except ValueError:
        raise ParseError(f"unknown surface {text!r}") from None
    if kind == "or" and g >= 0:
        return SurfaceClass(2 - 2 * g, True)
    if kind == "nor" and g >= 1:
        return SurfaceClass(2 - g, False)
    raise ParseError(f"unknown surface {text!r}")


def surface_name(s: SurfaceClass) -> str:
    for name, surf in _NAMED.items():
        if surf == s:
            return name
    return f"or:{s.genus}" if s.orientable else f"nor:{s.genus}"


class EmbeddedGraph:
    """Immutable signed rotation system.

    Use :func:`build_graph` or :func:`from_edges` rather than calling the
    constructor with unchecked data.
    """

    __slots__ = ("n", "ends", "signs", "rotation", "tail", "pos", "simple", "__dict__")

    def __init__(self, n, ends, signs, rotation, simple=True):
        self.n = n
        self.ends = tuple(tuple(e) for e in ends)
        self.signs = tuple(signs)
        self.rotation = tuple(tuple(r) for r in rotation)
        self.simple = simple
        tail = [0] * (2 * len(self.ends))
        pos = [0] * (2 * len(self.ends))
        for v, rot in enumerate(self.rotation):
            for i, d in enumerate(rot):
                tail[d] = v
                pos[d] = i
        self.tail = tuple(tail)
        self.pos = tuple(pos)

    # -- basic counts --------------------------------------------------
    @property
    def num_edges(self) -> int:
        return len(self.ends)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.ends)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def freedom(self) -> int:
        return 3 * self.n - self.num_edges

    def succ(self, d: int, eps: int = 1) -> int:
        """Next dart around ``tail[d]`` in direction ``eps``."""
        rot = self.rotation[self.tail[d]]
        return rot[(self.pos[d] + eps) % len(rot)]

    def head(self, d: int) -> int:
        return self.tail[d ^ 1]

    def edge_sign(self, d: int) -> int:
        return self.signs[d >> 1]

    def neighbours(self, v: int) -> list[int]:
        return [self.tail[d ^ 1] for d in self.rotation[v]]

    @cached_property
    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(uw): i for i, uw in enumerate(self.ends)}

    def edge_between(self, u: int, w: int) -> int | None:
        return self.edge_index.get(frozenset((u, w)))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(self.neighbours(v)) for v in range(self.n))

    # -- faces ---------------------------------------------------------
    @cached_property
    def _face_data(self):
        nd = self.num_darts
        face_of = [-1] * (2 * nd)
        walks: list[FaceWalk] = []
        for d0 in range(nd):
            for e0 in (1, -1):
                s0 = 2 * d0 + (e0 == -1)
                if face_of[s0] >= 0:
                    continue
                fid = len(walks)
                darts, epss = [], []
                d, eps = d0, e0
                while True:
                    s = 2 * d + (eps == -1)
                    if face_of[s] >= 0:
                        break
                    face_of[s] = fid
                    darts.append(d)
                    epss.append(eps)
                    x = d ^ 1
                    eps_w = eps * self.signs[d >> 1]
                    # reverse traversal of this edge side belongs to the same face
                    r = 2 * x + (eps_w == 1)
                    face_of[r] = fid
                    d = self.succ(x, eps_w)
                    eps = eps_w
                walks.append(FaceWalk(tuple(darts), tuple(epss)))
        return walks, face_of

    @property
    def faces(self) -> list[FaceWalk]:
        return self._face_data[0]

    def face_of_state(self, d: int, eps: int) -> int:
        return self._face_data[1][2 * d + (eps == -1)]

    @cached_property
    def edge_faces(self) -> tuple[tuple[int, int], ...]:
        """For each edge, the faces on its two sides (possibly equal)."""
        sides = [[] for _ in range(self.num_edges)]
        for fid, w in enumerate(self.faces):
            for d in w.darts:
                sides[d >> 1].append(fid)
        return tuple(tuple(s) for s in sides)

    def face_lengths(self) -> list[int]:
        return [w.length for w in self.faces]

    def face_multiset(self) -> tuple[int, ...]:
        return tuple(sorted((w.length for w in self.faces), reverse=True))

    @cached_property
    def face_vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.tail[d] for d in w.darts) for w in self.faces)

    # -- surface -------------------------------------------------------
    @cached_property
    def vertex_flips(self) -> tuple[int, ...] | None:
        """Local orientations making every sign +1, or None if impossible."""
        o = [0] * self.n
        o[0] = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for d in self.rotation[u]:
                w = self.tail[d ^ 1]
                want = o[u] * self.signs[d >> 1]
                if o[w] == 0:
                    o[w] = want
                    queue.append(w)
                elif o[w] != want:
                    return None
        return tuple(o)

    def is_orientable(self) -> bool:
        return self.vertex_flips is not None

    def euler_char(self) -> int:
        return self.n - self.num_edges + len(self.faces)

    def surface(self) -> SurfaceClass:
        return SurfaceClass(self.euler_char(), self.is_orientable())

    # -- misc ------------------------------------------------------------
    def degree_sequence(self) -> list[int]:
        return sorted((len(r) for r in self.rotation), reverse=True)

    def degree_signature(self) -> str:
        """Degree signature ``d1^r1 d2^r2 ...`` with degrees descending."""
        counts: dict[int, int] = {}
        for r in self.rotation:
            counts[len(r)] = counts.get(len(r), 0) + 1
        parts = []
        for d in sorted(counts, reverse=True):
            parts.append(str(d) if counts[d] == 1 else f"{d}^{counts[d]}")
        return " ".join(parts)

    def abstract_edges(self) -> list[tuple[int, int]]:
        return [tuple(sorted(e)) for e in self.ends]

    def __repr__(self) -> str:
        return (f"EmbeddedGraph(v={self.n}, e={self.num_edges}, "
                f"f={len(self.faces)}, {surface_name(self.surface())})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self.n, self.ends, self.signs, self.rotation) == (
            other.n, other.ends, other.signs, other.rotation)

    def __hash__(self) -> int:
        return hash((self.n, self.ends, self.signs, self.rotation))

    # -- transforms ------------------------------------------------------
    def mirror(self) -> "EmbeddedGraph":
        """Reverse every rotation (global reflection)."""
        rot = [tuple(reversed(r)) for r in self.rotation]
        return EmbeddedGraph(self.n, self.ends, self.signs, rot, self.simple)

    def flip_vertex(self, v: int) -> "EmbeddedGraph":
        """Reverse the rotation at ``v`` and negate the signs of its edges."""
        rot = list(self.rotation)
        rot[v] = tuple(reversed(rot[v]))
        signs = list(self.signs)
        for d in self.rotation[v]:
            if self.tail[d ^ 1] != v:
                signs[d >> 1] = -signs[d >> 1]
        return EmbeddedGraph(self.n, self.ends, signs, rot, self.simple)

    def relabel(self, vperm: Sequence[int], eperm: Sequence[int],
                swap: Sequence[bool] | None = None) -> "EmbeddedGraph":
        """Relabel vertices by ``vperm`` and edges by ``eperm``.

        ``swap[i]`` exchanges the two darts of old edge ``i``.
        """
        m = self.num_edges
        swap = swap or [False] * m
        dmap = [0] * (2 * m)
        for i in range(m):
            j = eperm[i]
            a, b = 2 * j, 2 * j + 1
            if swap[i]:
                a, b = b, a
            dmap[2 * i], dmap[2 * i + 1] = a, b
        ends = [None] * m
        signs = [0] * m
        for i in range(m):
            j = eperm[i]
            u, w = self.tail[2 * i], self.tail[2 * i + 1]
            if swap[i]:
                u, w = w, u
            ends[j] = (vperm[u], vperm[w])
            signs[j] = self.signs[i]
        rot = [None] * self.n
        for v in range(self.n):
            rot[vperm[v]] = tuple(dmap[d] for d in self.rotation[v])
        return EmbeddedGraph(self.n, ends, signs, rot, self.simple)

    # -- serialisation ---------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "vertices": self.n,
            "edges": [[self.tail[2 * i], self.tail[2 * i + 1], self.signs[i]]
                      for i in range(self.num_edges)],
            "rotation": [list(r) for r in self.rotation],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


# ---------------------------------------------------------------------------
# construction


def _check_simple(n, ends, rotation, tail):
    seen = set()
    for u, w in ends:
        if u == w:
            raise NotSimple(f"loop at vertex {u}")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise NotSimple(f"parallel edges between {u} and {w}")
        seen.add(key)


def _check_connected(n, ends):
    adj = [[] for _ in range(n)]
    for u, w in ends:
        adj[u].append(w)
        adj[w].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise DisconnectedGraph(f"{n - len(seen)} vertices unreachable from vertex 0")


def build_graph(rotation: Sequence[Sequence[int]], partner: Sequence[int],
                sign: Sequence[int], simple: bool = True) -> EmbeddedGraph:
    """Validate general rotation/partner/sign tables and build a graph.

    ``partner`` is an involution on darts, ``sign`` is indexed by dart and
    must agree on partnered darts.  Darts are renumbered so that edge ``i``
    owns darts ``2i`` and ``2i + 1``, keeping the order of first appearance.
    """
    nd = len(partner)
    for d, p in enumerate(partner):
        if not 0 <= p < nd:
            raise DanglingDart(f"dart {d} has partner {p} outside 0..{nd - 1}")
        if p == d or partner[p] != d:
            raise NonInvolution(f"partner is not a fixed-point-free involution at dart {d}")
    if len(sign) != nd:
        raise MapError("sign table must have one entry per dart")
    for d in range(nd):
        if sign[d] not in (1, -1):
            raise MapError(f"sign of dart {d} must be +1 or -1")
        if sign[d] != sign[partner[d]]:
            raise MapError(f"darts {d} and {partner[d]} disagree on sign")
    owner = [-1] * nd
    for v, rot in enumerate(rotation):
        for d in rot:
            if not 0 <= d < nd:
                raise DanglingDart(f"rotation of vertex {v} lists unknown dart {d}")
            if owner[d] >= 0:
                raise MapError(f"dart {d} appears in more than one rotation slot")
            owner[d] = v
    for d in range(nd):
        if owner[d] < 0:
            raise DanglingDart(f"dart {d} is not in any rotation")
    if not rotation or any(len(r) == 0 for r in rotation) and len(rotation) > 1:
        raise DisconnectedGraph("isolated vertex")
    new_id = {}
    ends, signs = [], []
    for d in range(nd):
        if d in new_id:
            continue
        p = partner[d]
        i = len(ends)
        new_id[d], new_id[p] = 2 * i, 2 * i + 1
        ends.append((owner[d], owner[p]))
        signs.append(sign[d])
    rot = [tuple(new_id[d] for d in r) for r in rotation]
    return _finish(len(rotation), ends, signs, rot, simple)


def _finish(n, ends, signs, rot, simple):
    if n > 1:
        _check_connected(n, ends)
    g = EmbeddedGraph(n, ends, signs, rot, simple)
    if simple:
        _check_simple(n, ends, rot, g.tail)
    return g


def from_edges(n: int, edges: Sequence[Sequence[int]],
               rotation: Sequence[Sequence[int]], simple: bool = True) -> EmbeddedGraph:
    """Build from the map-file layout: ``edges[i] = (u, w, sign)`` owns darts
    ``2i`` (at ``u``) and ``2i + 1`` (at ``w``)."""
    nd = 2 * len(edges)
    owner = [-1] * nd
    if len(rotation) != n:
        raise MapError(f"expected {n} rotations, got {len(rotation)}")
    for v, rot in enumerate(rotation):
        for d in rot:
            if not 0 <= d < nd:
                raise DanglingDart(f"rotation of vertex {v} lists unknown dart {d}")
            if owner[d] >= 0:
                raise MapError(f"dart {d} listed twice")
            owner[d] = v
    ends, signs = [], []
    for i, e in enumerate(edges):
        if len(e) == 2:
            u, w, s = e[0], e[1], 1
        else:
            u, w, s = e
        if s not in (1, -1):
            raise MapError(f"edge {i} has sign {s}")
        for d, v in ((2 * i, u), (2 * i + 1, w)):
            if owner[d] < 0:
                raise DanglingDart(f"dart {d} is not in any rotation")
            if owner[d] != v:
                raise MapError(f"dart {d} of edge {i} sits at vertex {owner[d]}, expected {v}")
        ends.append((u, w))
        signs.append(s)
    if any(len(r) == 0 for r in rotation) and n > 1:
        raise DisconnectedGraph("isolated vertex")
    return _finish(n, ends, signs, rotation, simple)


def from_polygons(polys: Iterable[Sequence[int]], simple: bool = True) -> EmbeddedGraph:
    """Build a map from its faces given as cyclic vertex sequences.

    Faces need not be consistently oriented, so nonorientable surfaces are
    allowed.  The underlying graph must be simple, since edges are identified
    by their end vertices, and every edge must have exactly two face sides
    (possibly on the same face).  Vertices must be ``0..n-1``.
    """
    polys = [list(f) for f in polys]
    n = 1 + max(max(f) for f in polys)
    edge_id: dict[tuple[int, int], int] = {}
    ends: list[tuple[int, int]] = []
    # sides[e] lists (poly, pos) for the polygon side poly[pos] -> poly[pos+1]
    sides: list[list[tuple[int, int]]] = []
    for pi, f in enumerate(polys):
        k = len(f)
        for j in range(k):
            u, w = f[j], f[(j + 1) % k]
            if u == w:
                raise NotSimple(f"loop at vertex {u}")
            key = (min(u, w), max(u, w))
            if key not in edge_id:
                edge_id[key] = len(ends)
                ends.append(key)
                sides.append([])
            sides[edge_id[key]].append((pi, j))
    for i, sd in enumerate(sides):
        if len(sd) != 2:
            raise MapError(f"edge {ends[i]} lies on {len(sd)} face sides")

    # corner (poly, j) sits at vertex poly[j] between sides j-1 and j
    def side_edge(pi, j):
        f = polys[pi]
        j %= len(f)
        return edge_id[(min(f[j], f[(j + 1) % len(f)]), max(f[j], f[(j + 1) % len(f)]))]

    corners_at: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for pi, f in enumerate(polys):
        for j, v in enumerate(f):
            corners_at[v].append((pi, j))
    rot_edges: list[list[int]] = []
    # before[(v, side)] is True when the corner of that side at v precedes
    # the edge in v's rotation
    before: dict[tuple[int, int, int], bool] = {}
    for v in range(n):
        cs = corners_at[v]
        if not cs:
            raise DisconnectedGraph(f"vertex {v} lies on no face")
        by_edge: dict[int, list[int]] = {}
        for ci, (pi, j) in enumerate(cs):
            by_edge.setdefault(side_edge(pi, j - 1), []).append(ci)
            by_edge.setdefault(side_edge(pi, j), []).append(ci)
        used = [False] * len(cs)
        ci = 0
        pi, j = cs[0]
        e = side_edge(pi, j)
        order = []
        while not used[ci]:
            used[ci] = True
            pi, j = cs[ci]
            # corner ci goes from edge e to its other edge
            a, b = side_edge(pi, j - 1), side_edge(pi, j)
            if a == b == e:
                # pendant vertex: one edge, one corner
                if len(cs) != 1:
                    raise MapError(f"vertex {v} link is not a single cycle")
                before[(v, pi, j)] = True
                before[(v, pi, (j - 1) % len(polys[pi]))] = False
                order.append(e)
                break
            if b == e and a != e:
                e_next, s_prev, s_next = a, (pi, j), (pi, (j - 1) % len(polys[pi]))
            elif a == e and b != e:
                e_next, s_prev, s_next = b, (pi, (j - 1) % len(polys[pi])), (pi, j)
            else:
                raise NotSimple(f"degenerate corner at vertex {v}")
            before[(v,) + s_prev] = False
            before[(v,) + s_next] = True
            order.append(e_next)
            nxt = [c for c in by_edge[e_next] if c != ci]
            if len(nxt) != 1:
                raise MapError(f"vertex {v} link is not a cycle")
            ci = nxt[0]
            e = e_next
        if not all(used):
            raise MapError(f"vertex {v} link is not a single cycle")
        rot_edges.append(order)
    signs = []
    for i, (u, w) in enumerate(ends):
        pi, j = sides[i][0]
        su = before[(u, pi, j)]
        sw = before[(w, pi, j)]
        signs.append(1 if su != sw else -1)
    rot = [tuple(2 * e if ends[e][0] == v else 2 * e + 1 for e in order)
           for v, order in enumerate(rot_edges)]
    g = _finish(n, ends, signs, rot, simple)
    if len(g.faces) != len(polys):
        raise MapError("face tracing does not reproduce the given faces")
    return g


from_faces = from_polygons


def read_map_json(text: str, lenient: bool = False, simple: bool = True) -> EmbeddedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from None
    return map_from_dict(data, lenient=lenient, simple=simple)


def map_from_dict(data: dict, lenient: bool = False, simple: bool = True) -> EmbeddedGraph:
    if not isinstance(data, dict):
        raise ParseError("map file must hold a JSON object")
    fields = {"vertices", "edges", "rotation"}
    missing = fields - data.keys()
    if missing:
        raise ParseError(f"missing fields: {sorted(missing)}")
    extra = data.keys() - fields
    if extra and not lenient:
        raise ParseError(f"unknown fields: {sorted(extra)}")
    try:
        return from_edges(int(data["vertices"]), data["edges"], data["rotation"], simple=simple)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MapError):
            raise
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# canonical form


def _bfs_code(g: EmbeddedGraph, root: int, eps0: int, best=None):
    """BFS code from dart ``root`` read in direction ``eps0``.

    Returns None as soon as the code exceeds ``best`` lexicographically.
    """
    n = g.n
    num = [-1] * n
    entry = [0] * n
    orient = [0] * n
    v0 = g.tail[root]
    num[v0] = 0
    entry[v0] = root
    orient[v0] = eps0
    order = [v0]
    code = []
    tail, pos, rotation, signs = g.tail, g.pos, g.rotation, g.signs
    k = 0
    idx = 0
    bl = len(best) if best is not None else 0
    less = False
    while idx < len(order):
        u = order[idx]
        idx += 1
        rot = rotation[u]
        deg = len(rot)
        o = orient[u]
        p0 = pos[entry[u]]
        items = [deg]
        for j in range(deg):
            d = rot[(p0 + o * j) % deg]
            x = d ^ 1
            w = tail[x]
            s = signs[d >> 1]
            if num[w] < 0:
                num[w] = len(order)
                entry[w] = x
                orient[w] = o * s
                order.append(w)
            ow = orient[w]
            rw = rotation[w]
            rel = ((pos[x] - pos[entry[w]]) * ow) % len(rw)
            items.append(num[w])
            items.append(rel)
            items.append(1 if o * ow * s == 1 else 0)
        for it in items:
            if best is not None and not less:
                if k < bl:
                    b = best[k]
                    if it > b:
                        return None
                    if it < b:
                        less = True
            code.append(it)
            k += 1
    return code


def canonical_tuple(g: EmbeddedGraph) -> tuple[int, ...]:
    best = None
    for d in range(g.num_darts):
        for eps in (1, -1):
            c = _bfs_code(g, d, eps, best)
            if c is not None and (best is None or c < best):
                best = c
    return (g.n, g.num_edges) + tuple(best or ())


def canonical_code(g: EmbeddedGraph) -> bytes:
    """Byte string equal for two maps exactly when they are isomorphic,
    reflections included."""
    t = canonical_tuple(g)
    out = bytearray()
    for x in t:
        out += x.to_bytes(2, "big")
    return bytes(out)


def isomorphic(g: EmbeddedGraph, h: EmbeddedGraph) -> bool:
    if (g.n, g.num_edges) != (h.n, h.num_edges):
        return False
    if g.face_multiset() != h.face_multiset():
        return False
    return canonical_code(g) == canonical_code(h)


def from_canonical_tuple(t: Sequence[int]) -> EmbeddedGraph:
    """Rebuild a map from :func:`canonical_tuple` output."""
    n, m = t[0], t[1]
    body = t[2:]
    rot_raw = []
    i = 0
    for _ in range(n):
        deg = body[i]
        i += 1
        items = []
        for _ in range(deg):
            items.append((body[i], body[i + 1], body[i + 2]))
            i += 3
        rot_raw.append(items)
    # dart (u, j) is the j-th slot of u; its partner is (w, rel)
    slot_id = {}
    for u in range(n):
        for j in range(len(rot_raw[u])):
            slot_id[(u, j)] = len(slot_id)
    partner = [0] * len(slot_id)
    sign = [0] * len(slot_id)
    for u in range(n):
        for j, (w, rel, s) in enumerate(rot_raw[u]):
            a = slot_id[(u, j)]
            b = slot_id[(w, rel)]
            partner[a] = b
            sign[a] = 1 if s else -1
    rotation = [[slot_id[(u, j)] for j in range(len(rot_raw[u]))] for u in range(n)]
    g = build_graph(rotation, partner, sign, simple=False)
    if g.num_edges != m:
        raise MapError("inconsistent canonical tuple")
    return g


# ---------------------------------------------------------------------------
# standard examples


def k3_sphere() -> EmbeddedGraph:
    return from_faces([[0, 1, 2], [0, 2, 1]])


def k3_projective() -> EmbeddedGraph:
    g = k3_sphere()
    signs = list(g.signs)
    signs[0] = -1
    return EmbeddedGraph(g.n, g.ends, signs, g.rotation)


def k7_torus() -> EmbeddedGraph:
    """K7 on the torus: the rotation at ``i`` is ``i+1, i+3, i+2, i+6, i+4, i+5``."""
    steps = (1, 3, 2, 6, 4, 5)
    ends = [(u, w) for u, w in combinations(range(7), 2)]
    eid = {frozenset(e): i for i, e in enumerate(ends)}

    def dart(u, w):
        i = eid[frozenset((u, w))]
        return 2 * i if ends[i][0] == u else 2 * i + 1

    rot = [[dart(i, (i + s) % 7) for s in steps] for i in range(7)]
    return from_edges(7, [(u, w, 1) for u, w in ends], rot)


def octahedron() -> EmbeddedGraph:
    # poles 0, 5; equator 1..4
    faces = []
    for i in range(4):
        a, b = 1 + i, 1 + (i + 1) % 4
        faces.append([0, a, b])
        faces.append([5, b, a])
    return from_faces(faces)


def bipyramid(k: int = 3) -> EmbeddedGraph:
    """Double pyramid over a k-cycle; k=3 is the 5-vertex sphere triangulation."""
    top, bot = k, k + 1
    faces = []
    for i in range(k):
        a, b = i, (i + 1) % k
        faces.append([top, a, b])
        faces.append([bot, b, a])
    return from_faces(faces)


def tetrahedron() -> EmbeddedGraph:
    return from_faces([[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]])


def k6_projective() -> EmbeddedGraph:
    """K6 triangulating the projective plane (antipodal quotient of the icosahedron)."""
    # Icosahedron with antipodal vertex pairs identified: ten triangles.
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    return from_triangle_list(tris)


def from_triangle_list(tris: Sequence[Sequence[int]]) -> EmbeddedGraph:
    return from_polygons(tris)
