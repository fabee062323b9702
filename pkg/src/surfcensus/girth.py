"""Superfaces and girth inequalities.

A superface ``U`` is a face of a subgraph ``K`` (minimum degree 2) whose
complement still contains a face of ``G``.  It is stored as the set of
faces of ``G`` it contains together with the removed edges inside it; the
boundary walks are the face walks of ``K`` bounding ``U``.

For ``f(G) = alpha`` the higher genus girth inequality reads

    sum_k (|d_k| - 3) >= sum_{I(U)} (|c_k| - 3) - 6 (g_r(U) + s - 1)

and is equivalent to ``f(G_W) >= alpha`` for the complement ``W`` of a
balanced simple superface.  For a disc (``g_r = 0``, ``s = 1``) it is the
planar girth inequality ``|c| - 3 >= sum (|c_k| - 3)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .maps import EmbeddedGraph, FaceWalk
from .sparsity import PreconditionFGNotAlpha, brute_force_sparse
from .surgery import SubgraphEmbedding, restrict_to_subgraph

try:  # compiled scanner
    from . import _girthcore
except ImportError:  # pragma: no cover
    _girthcore = None


class PreconditionNotCellular(ValueError):
    pass


class NotPlanarType(ValueError):
    pass


# ---------------------------------------------------------------------------
# superfaces


def _freedom(vs, es) -> int:
    return 3 * len(vs) - len(es)


def _closure(g: EmbeddedGraph, faces: Iterable[int]) -> tuple[frozenset, frozenset]:
    vs, es = set(), set()
    for f in faces:
        for d in g.faces[f].darts:
            vs.add(g.tail[d])
            es.add(d >> 1)
    return frozenset(vs), frozenset(es)


def _trace_group(g: EmbeddedGraph, faces: frozenset, removed: frozenset) -> list[FaceWalk]:
    """Face walks of ``G - removed`` that bound the union of ``faces``."""
    seen = set()
    walks = []
    for i in range(g.num_edges):
        if i in removed:
            continue
        for d in (2 * i, 2 * i + 1):
            for e0 in (1, -1):
                if (d, e0) in seen or g.face_of_state(d, e0) not in faces:
                    continue
                darts, epss = [], []
                dd, ee = d, e0
                while (dd, ee) not in seen:
                    seen.add((dd, ee))
                    darts.append(dd)
                    epss.append(ee)
                    x = dd ^ 1
                    ew = ee * g.signs[dd >> 1]
                    seen.add((x, -ew))
                    y = g.succ(x, ew)
                    while (y >> 1) in removed:
                        y = g.succ(y, ew)
                    dd, ee = y, ew
                walks.append(FaceWalk(tuple(darts), tuple(epss)))
    return walks


def _orientable_group(g: EmbeddedGraph, faces: frozenset, interior: frozenset) -> bool:
    """Can the faces be oriented so that every glued edge is traversed in
    opposite directions by its two sides?"""
    uses: dict[int, list[tuple[int, int]]] = {}
    for f in faces:
        for d in g.faces[f].darts:
            if (d >> 1) in interior:
                uses.setdefault(d >> 1, []).append((f, d))
    colour = {}
    adj: dict[int, list[tuple[int, int]]] = {f: [] for f in faces}
    for i, occ in uses.items():
        (f1, d1), (f2, d2) = occ
        flip = -1 if d1 == d2 else 1      # same direction: opposite colours
        if f1 == f2:
            if flip < 0:
                return False
            continue
        adj[f1].append((f2, flip))
        adj[f2].append((f1, flip))
    for start in faces:
        if start in colour:
            continue
        colour[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for h, flip in adj[f]:
                want = colour[f] * flip
                if h not in colour:
                    colour[h] = want
                    stack.append(h)
                elif colour[h] != want:
                    return False
    return True


@dataclass(frozen=True)
class Superface:
    parent: EmbeddedGraph = field(repr=False, compare=False)
    faces: frozenset
    interior_edges: frozenset
    interior_vertices: frozenset = field(compare=False)
    boundary: tuple = field(compare=False)
    chi: int = field(compare=False)
    orientable: bool = field(compare=False)
    holes: tuple = field(compare=False)
    complement: tuple = field(compare=False)
    exterior_components: int = field(compare=False)
    simple: bool = field(compare=False)

    # -- derived quantities ---------------------------------------------
    @property
    def s(self) -> int:
        return len(self.boundary)

    @property
    def boundary_lengths(self) -> tuple[int, ...]:
        return tuple(w.length for w in self.boundary)

    @property
    def euler_genus(self) -> int:
        """Euler genus of the closed surface obtained by capping the boundary."""
        return 2 - self.chi - self.s

    @property
    def genus(self) -> int:
        eg = self.euler_genus
        return eg // 2 if self.orientable else eg

    @property
    def reduced_genus(self) -> Fraction:
        return Fraction(self.euler_genus, 2)

    @property
    def balanced(self) -> bool:
        return len(self.complement) == 1

    @property
    def is_disc(self) -> bool:
        return self.chi == 1 and self.s == 1

    @property
    def hole_excess(self) -> int:
        return sum(self.parent.faces[f].length - 3 for f in self.holes)

    @property
    def kappa(self) -> int:
        return len(self.complement)

    @property
    def carrier(self) -> SubgraphEmbedding:
        return restrict_to_subgraph(self.parent, set(range(self.parent.num_edges)) - self.interior_edges)

    def lhs(self) -> int:
        return sum(n - 3 for n in self.boundary_lengths)

    def rhs(self) -> int:
        # sum_{I(U)} (|c_k| - 3) - 6 (g_r + s - 1); 6 g_r = 3 (2 - chi - s)
        return self.hole_excess - 3 * self.euler_genus - 6 * (self.s - 1)

    def girth_holds(self) -> bool:
        return self.lhs() >= self.rhs()

    def is_critical(self) -> bool:
        return self.lhs() == self.rhs()

    def is_trivial(self) -> bool:
        """A single face, or the complement of one triangle; both are
        critical in every graph and carry no information."""
        if not self.interior_edges:
            return True
        rest = set(range(len(self.parent.faces))) - self.faces
        return len(rest) == 1 and self.parent.faces[next(iter(rest))].length == 3

    # -- associated subgraphs -------------------------------------------
    def closure_graph(self) -> tuple[frozenset, frozenset]:
        """Vertices and edges of the closure ``G_U``."""
        return _closure(self.parent, self.faces)

    def complement_graphs(self) -> list[tuple[frozenset, frozenset]]:
        return [_closure(self.parent, w) for w in self.complement]

    def exterior_graph(self) -> tuple[frozenset, frozenset]:
        """Everything not inside ``U``: ``G`` minus the interior vertices
        and interior edges."""
        g = self.parent
        return (frozenset(range(g.n)) - self.interior_vertices,
                frozenset(range(g.num_edges)) - self.interior_edges)

    def freedom_closure(self) -> int:
        return _freedom(*self.closure_graph())

    def freedom_exterior(self) -> int:
        return _freedom(*self.exterior_graph())

    def as_dict(self) -> dict:
        return {
            "faces": sorted(self.faces),
            "interior_edges": sorted(self.interior_edges),
            "boundary": [list(w.darts) for w in self.boundary],
            "boundary_eps": [list(w.eps) for w in self.boundary],
            "lengths": list(self.boundary_lengths),
            "chi": self.chi,
            "s": self.s,
            "reduced_genus": str(self.reduced_genus),
            "orientable": self.orientable,
            "balanced": self.balanced,
            "simple": self.simple,
            "holes": list(self.holes),
            "lhs": self.lhs(),
            "rhs": self.rhs(),
        }


def make_superface(g: EmbeddedGraph, faces: Iterable[int], interior_edges: Iterable[int]) -> Superface:
    """Build the superface with the given faces and interior edges.

    Raises ValueError if the data do not describe a superface.
    """
    fs = frozenset(faces)
    ie = frozenset(interior_edges)
    nf = len(g.faces)
    if not fs:
        raise ValueError("a superface contains at least one face")
    if len(fs) == nf:
        raise ValueError("dense: the complement contains no face")
    for i in ie:
        a, b = g.edge_faces[i]
        if a not in fs or b not in fs:
            raise ValueError(f"interior edge {i} has a side outside the superface")
    # connected through the interior edges
    reach = {min(fs)}
    stack = [min(fs)]
    while stack:
        f = stack.pop()
        for d in g.faces[f].darts:
            i = d >> 1
            if i in ie:
                for h in g.edge_faces[i]:
                    if h not in reach:
                        reach.add(h)
                        stack.append(h)
    if reach != fs:
        raise ValueError("faces are not joined by the interior edges")
    inner_v = set()
    for v in range(g.n):
        k = sum(1 for d in g.rotation[v] if (d >> 1) in ie)
        if k == g.degree(v):
            inner_v.add(v)
        elif g.degree(v) - k == 1:
            raise ValueError(f"vertex {v} would have degree 1 in the carrier")
    walks = _trace_group(g, fs, ie)
    chi = len(inner_v) - len(ie) + len(fs)
    seen_v: set[int] = set()
    simple = True
    for w in walks:
        vs = [g.tail[d] for d in w.darts]
        es = [d >> 1 for d in w.darts]
        if len(set(vs)) != len(vs) or len(set(es)) != len(es) or seen_v & set(vs):
            simple = False
        seen_v |= set(vs)
    # components of the complement of the closure
    rest = [f for f in range(nf) if f not in fs]
    comp: dict[int, int] = {}
    groups: list[set[int]] = []
    for f0 in rest:
        if f0 in comp:
            continue
        comp[f0] = len(groups)
        groups.append({f0})
        stack = [f0]
        while stack:
            f = stack.pop()
            for d in g.faces[f].darts:
                i = d >> 1
                a, b = g.edge_faces[i]
                if a in fs or b in fs:
                    continue
                h = b if a == f else a
                if h not in comp:
                    comp[h] = comp[f0]
                    groups[-1].add(h)
                    stack.append(h)
    # components of M - U, i.e. of the exterior graph
    ev = set(range(g.n)) - inner_v
    parent = {v: v for v in ev}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    k = len(ev)
    for i, (u, w) in enumerate(g.ends):
        if i in ie:
            continue
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
            k -= 1
    holes = tuple(sorted(f for f in fs if g.faces[f].length != 3))
    return Superface(g, fs, ie, frozenset(inner_v), tuple(walks), chi,
                     _orientable_group(g, fs, ie), holes,
                     tuple(frozenset(x) for x in sorted(groups, key=min)), k, simple)


def superfaces_of(g: EmbeddedGraph, k: SubgraphEmbedding) -> list[Superface]:
    """The superfaces that are faces of the subgraph ``k``."""
    if any(k.degree(v) == 1 for v in k.vertices):
        raise ValueError("the subgraph has a vertex of degree 1")
    removed = k.removed_edges
    out = []
    for grp in k.face_groups:
        if len(grp) == len(g.faces):
            continue
        inner = frozenset(i for i in removed if g.edge_faces[i][0] in grp)
        out.append(make_superface(g, grp, inner))
    return out


def iter_superfaces_by_subgraph(g: EmbeddedGraph) -> Iterator[Superface]:
    """Every superface, found by running over all subgraphs ``K`` with
    minimum degree 2.  Exponential in the number of edges; reference use."""
    m = g.num_edges
    seen = set()
    inc = [[d >> 1 for d in g.rotation[v]] for v in range(g.n)]
    for mask in range(1, 1 << m):
        if any(sum(1 for i in es if mask >> i & 1) == 1 for es in inc):
            continue
        k = restrict_to_subgraph(g, [i for i in range(m) if mask >> i & 1])
        for grp in k.face_groups:
            if len(grp) == len(g.faces):
                continue
            inner = frozenset(i for i in range(m) if not mask >> i & 1 and g.edge_faces[i][0] in grp)
            key = (frozenset(grp), inner)
            if key in seen:
                continue
            seen.add(key)
            yield make_superface(g, grp, inner)


def iter_superfaces(g: EmbeddedGraph) -> Iterator[Superface]:
    """Every superface, enumerated as connected sets of glued faces."""
    nf = len(g.faces)
    fedges = [sorted({d >> 1 for d in w.darts}) for w in g.faces]
    for f0 in range(nf):
        allowed = {i for i in range(g.num_edges) if min(g.edge_faces[i]) >= f0}
        stack = [(frozenset([f0]), frozenset(), frozenset())]
        while stack:
            fs, es, excl = stack.pop()
            try:
                yield make_superface(g, fs, es)
            except ValueError:
                pass
            cand = sorted({i for f in fs for i in fedges[f]} & allowed - es - excl)
            x = set(excl)
            for i in cand:
                stack.append((fs | set(g.edge_faces[i]), es | {i}, frozenset(x)))
                x.add(i)


def reduced_genus_of(u: Superface, rng: random.Random | None = None) -> Fraction:
    """Reduced genus of ``u`` through an explicit normalisation.

    The faces of ``u`` are taken as separate polygons whose corners are then
    identified one glued edge at a time, in random order.  Boundary corners
    are never identified across the boundary, which realises the splitting
    of pinched boundary vertices.  The result is ``(2 - chi - s) / 2`` of the
    normalised closure.
    """
    rng = rng or random.Random(0)
    g = u.parent
    corner: dict[tuple[int, int], int] = {}
    # corners of the polygons: (face, index)
    faces = sorted(u.faces)
    for f in faces:
        for j in range(g.faces[f].length):
            corner[(f, j)] = len(corner)
    parent = list(range(len(corner)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    occ: dict[int, list[tuple[int, int]]] = {}
    for f in faces:
        for j, d in enumerate(g.faces[f].darts):
            occ.setdefault(d >> 1, []).append((f, j, d))
    glue = sorted(u.interior_edges)
    rng.shuffle(glue)
    for i in glue:
        (f1, j1, d1), (f2, j2, d2) = occ[i]
        k1, k2 = g.faces[f1].length, g.faces[f2].length
        a1, b1 = corner[(f1, j1)], corner[(f1, (j1 + 1) % k1)]   # tail, head of d1
        a2, b2 = corner[(f2, j2)], corner[(f2, (j2 + 1) % k2)]
        if d1 != d2:
            a2, b2 = b2, a2
        for x, y in ((a1, a2), (b1, b2)):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    nv = len({find(c) for c in corner.values()})
    ne = len(u.interior_edges) + sum(u.boundary_lengths)
    chi = nv - ne + len(faces)
    return Fraction(2 - chi - u.s, 2)


# ---------------------------------------------------------------------------
# reports


@dataclass
class GirthReport:
    kind: str
    alpha: int
    satisfied: bool
    witnesses: list = field(default_factory=list)
    critical: list = field(default_factory=list)
    checked: int = 0
    exhaustive: bool = True
    cross_check: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "alpha": self.alpha, "satisfied": self.satisfied,
                "checked": self.checked, "exhaustive": self.exhaustive,
                "witnesses": self.witnesses, "critical": self.critical,
                "cross_check": self.cross_check}


def _require_alpha(g: EmbeddedGraph, alpha: int) -> None:
    if g.freedom() != alpha:
        raise PreconditionFGNotAlpha(f"f(G) = {g.freedom()}, expected {alpha}")


def _masks_to_superface(g, fmask, emask) -> Superface:
    fs = [f for f in range(len(g.faces)) if fmask >> f & 1]
    es = [i for i in range(g.num_edges) if emask >> i & 1]
    return make_superface(g, fs, es)


def native_available() -> bool:
    return _girthcore is not None


def scan(g: EmbeddedGraph, alpha: int, cap: int | None = None, budget: int | None = None,
         limit: int = 16, backend: str = "auto") -> dict:
    """Run every superface of ``g`` through the girth and sparsity counts.

    Returns tallies (violations, critical superfaces, disagreements between
    the equivalent formulations) and a few witnesses as (face mask, edge
    mask, extra) triples.
    """
    if backend == "auto":
        backend = "native" if _girthcore is not None and g.num_edges <= 64 and len(g.faces) <= 64 else "python"
    if backend == "native":
        fos = list(g._face_data[1])
        return _girthcore.scan(g.n, [list(r) for r in g.rotation], list(g.signs), fos,
                               [list(w.darts) for w in g.faces], alpha,
                               -1 if cap is None else cap, -1 if budget is None else budget, limit)
    return _scan_python(g, alpha, cap, budget, limit)


def _mask(xs) -> int:
    out = 0
    for x in xs:
        out |= 1 << x
    return out


def _scan_python(g, alpha, cap, budget, limit) -> dict:
    t = dict.fromkeys(["superfaces", "discs", "balanced", "simple", "nonorientable",
                       "planar_len_violations", "planar_ext_violations", "planar_mismatch",
                       "violations", "balanced_violations", "critical", "balanced_simple",
                       "balanced_simple_mismatch", "general_simple", "general_simple_mismatch",
                       "general_nonsimple", "normalized_mismatch", "exterior_violations",
                       "sparsity_violations", "addition_checked", "addition_failures"], 0)
    t["critical_edges"] = 0
    t["critical_edges_balanced"] = 0
    for key in ("girth_witnesses", "sparsity_witnesses", "critical_witnesses",
                "planar_witnesses", "planar_critical"):
        t[key] = []
    t["exhaustive"] = True
    chi_m = g.euler_char()
    for u in iter_superfaces(g):
        if budget is not None and t["superfaces"] >= budget:
            t["exhaustive"] = False
            break
        t["superfaces"] += 1
        fm, em = _mask(u.faces), _mask(u.interior_edges)
        t["discs"] += u.is_disc
        t["balanced"] += u.balanced
        t["simple"] += u.simple
        t["nonorientable"] += not u.orientable
        fext = u.freedom_exterior()
        if u.is_disc:
            a = u.boundary_lengths[0] - 3 >= u.hole_excess
            b = fext >= alpha
            t["planar_len_violations"] += not a
            t["planar_ext_violations"] += not b
            t["planar_mismatch"] += a != b
            if not a and len(t["planar_witnesses"]) < limit:
                t["planar_witnesses"].append((fm, em, u.boundary_lengths[0]))
            if a and u.holes and u.boundary_lengths[0] - 3 == u.hole_excess and len(t["planar_critical"]) < limit:
                t["planar_critical"].append((fm, em, u.boundary_lengths[0]))
        ok = u.girth_holds()
        if cap is None or u.genus <= cap:
            if not ok:
                t["violations"] += 1
                t["balanced_violations"] += u.balanced
                if len(t["girth_witnesses"]) < limit:
                    t["girth_witnesses"].append((fm, em, int(u.balanced)))
            if u.is_critical() and not u.is_trivial():
                t["critical"] += 1
                bm = _mask(d >> 1 for w in u.boundary for d in w.darts)
                t["critical_edges"] |= bm
                if u.balanced:
                    t["critical_edges_balanced"] |= bm
                if len(t["critical_witnesses"]) < limit:
                    t["critical_witnesses"].append((fm, em, int(u.balanced)))
        kn = u.exterior_components
        t["normalized_mismatch"] += (fext >= kn * alpha) != (u.lhs() >= u.rhs() + alpha * (kn - 1))
        fs = [_freedom(*c) for c in u.complement_graphs()]
        if u.simple:
            t["general_simple"] += 1
            t["general_simple_mismatch"] += ((sum(fs) >= u.kappa * alpha)
                                             != (u.lhs() >= u.rhs() + alpha * (u.kappa - 1))
                                             or kn != u.kappa)
        else:
            t["general_nonsimple"] += 1
        if u.balanced and u.simple:
            t["balanced_simple"] += 1
            t["balanced_simple_mismatch"] += (fs[0] >= alpha) != ok
            w = _complement_superface(u)
            t["addition_checked"] += 1
            # g_r(M) = g_r(M_U) + g_r(M_W) + (s - 1)
            if Fraction(2 - chi_m, 2) != u.reduced_genus + w.reduced_genus + (u.s - 1):
                t["addition_failures"] += 1
        t["exterior_violations"] += fext < alpha
        fu = u.freedom_closure()
        if fu < alpha:
            t["sparsity_violations"] += 1
            if len(t["sparsity_witnesses"]) < limit:
                t["sparsity_witnesses"].append((fm, em, fu))
    return t


def _complement_superface(u: Superface) -> Superface:
    g = u.parent
    (w,) = u.complement
    inner = frozenset(i for i in range(g.num_edges)
                      if g.edge_faces[i][0] in w and g.edge_faces[i][1] in w)
    return make_superface(g, w, inner)


def complementary_superface(u: Superface) -> Superface:
    """The superface formed by the complement of a balanced superface."""
    if not u.balanced:
        raise ValueError("only balanced superfaces have a complementary superface")
    return _complement_superface(u)


def _witness_dicts(g, triples, extra_key=None) -> list[dict]:
    out = []
    for fm, em, extra in triples:
        u = _masks_to_superface(g, fm, em)
        d = u.as_dict()
        if extra_key:
            d[extra_key] = extra
        out.append(d)
    return out


def planar_girth_check(g: EmbeddedGraph, alpha: int, budget: int | None = None,
                       backend: str = "auto", limit: int = 16) -> GirthReport:
    """Girth inequality for every planar type closed walk (disc superface).

    The length form ``|c| - 3 >= sum (|c_k| - 3)`` and the exterior form
    ``f(Ext_G(c)) >= alpha`` are both evaluated; their disagreement count is
    reported under ``cross_check``.
    """
    _require_alpha(g, alpha)
    t = scan(g, alpha, None, budget, limit, backend)
    ok = t["planar_len_violations"] == 0
    return GirthReport("planar", alpha, ok, _witness_dicts(g, t["planar_witnesses"]),
                       _witness_dicts(g, t["planar_critical"]), t["discs"], t["exhaustive"],
                       {"length_vs_exterior": t["planar_mismatch"],
                        "exterior_violations": t["planar_ext_violations"]})


def higher_genus_girth_check(g: EmbeddedGraph, alpha: int, genus_cap: int | None = None,
                             budget: int | None = None, backend: str = "auto",
                             limit: int = 16, balanced_only: bool = True) -> GirthReport:
    """Higher genus girth inequality for the superfaces with ``g(U) <= genus_cap``.

    Membership is decided on balanced superfaces (``balanced_only``); the
    count over all superfaces and the disagreement counts of the equivalent
    forms (``f(G_W) >= alpha`` for balanced simple superfaces, the
    component form for all superfaces) are reported as cross-checks.
    """
    _require_alpha(g, alpha)
    if genus_cap is not None and genus_cap > g.surface().genus:
        raise ValueError("genus cap exceeds the genus of the surface")
    t = scan(g, alpha, genus_cap, budget, limit, backend)
    bad = t["balanced_violations"] if balanced_only else t["violations"]
    wit = [w for w in t["girth_witnesses"] if w[2] or not balanced_only]
    return GirthReport("higher-genus", alpha, bad == 0, _witness_dicts(g, wit),
                       _witness_dicts(g, t["critical_witnesses"]), t["superfaces"], t["exhaustive"],
                       {"violations_all": t["violations"],
                        "violations_balanced": t["balanced_violations"],
                        "balanced_simple_vs_complement": t["balanced_simple_mismatch"],
                        "components_vs_inequality": t["normalized_mismatch"],
                        "simple_components_vs_inequality": t["general_simple_mismatch"],
                        "addition_formula_failures": t["addition_failures"]})


def superface_sparsity_check(g: EmbeddedGraph, alpha: int, budget: int | None = None,
                             backend: str = "auto"):
    """``f(G_U) >= alpha`` for every superface; returns ``(ok, witness)``."""
    _require_alpha(g, alpha)
    t = scan(g, alpha, None, budget, 1, backend)
    if t["sparsity_violations"] == 0:
        return True, None
    fm, em, fu = t["sparsity_witnesses"][0]
    d = _masks_to_superface(g, fm, em).as_dict()
    d["freedom"] = fu
    return False, d


def interior_graph(g: EmbeddedGraph, u: Superface) -> tuple[frozenset, frozenset]:
    if not u.is_disc:
        raise NotPlanarType("the superface is not a disc")
    return u.closure_graph()


def exterior_graph(g: EmbeddedGraph, u: Superface) -> tuple[frozenset, frozenset]:
    if not u.is_disc:
        raise NotPlanarType("the superface is not a disc")
    return u.exterior_graph()


def planar_walks(g: EmbeddedGraph) -> Iterator[Superface]:
    for u in iter_superfaces(g):
        if u.is_disc:
            yield u


# ---------------------------------------------------------------------------
# cycles and critical edges


def cycle_sides(g: EmbeddedGraph, cycle_edges: Iterable[int]) -> list[tuple]:
    """The faces of the cycle viewed as a subgraph: (faces, chi, walks)."""
    k = restrict_to_subgraph(g, cycle_edges, strict=True)
    removed = k.removed_edges
    out = []
    for grp in k.face_groups:
        fs = frozenset(grp)
        inner = frozenset(i for i in removed if g.edge_faces[i][0] in fs)
        inner_v = {v for v in range(g.n) if all((d >> 1) in inner for d in g.rotation[v])}
        chi = len(inner_v) - len(inner) + len(fs)
        out.append((fs, chi, _trace_group(g, fs, removed)))
    return out


def is_essential_cycle(g: EmbeddedGraph, cycle_edges: Iterable[int]) -> tuple[bool, bool]:
    """``(essential, planar)`` for a cycle given by its edges.

    The cycle is null-homotopic when one of its sides is a disc bounded by
    the cycle traversed once.  It is a planar cycle in the narrow sense when
    such a disc side contains only triangular faces.
    """
    es = list(cycle_edges)
    essential, planar = True, False
    for fs, chi, walks in cycle_sides(g, es):
        if chi == 1 and len(walks) == 1 and walks[0].length == len(es):
            essential = False
            if all(g.faces[f].length == 3 for f in fs):
                planar = True
    return essential, planar


def three_cycles(g: EmbeddedGraph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adjacency
    for x in range(g.n):
        for y in adj[x]:
            if y <= x:
                continue
            for z in adj[x] & adj[y]:
                if z > y:
                    out.append((x, y, z))
    return out


def essential_three_cycles(g: EmbeddedGraph) -> list[tuple[int, int, int]]:
    out = []
    for x, y, z in three_cycles(g):
        es = [g.edge_between(x, y), g.edge_between(y, z), g.edge_between(x, z)]
        if is_essential_cycle(g, es)[0]:
            out.append((x, y, z))
    return out


def critical_edges(g: EmbeddedGraph, alpha: int, genus_cap: int | None = None,
                   budget: int | None = None, backend: str = "auto") -> dict[int, str]:
    """Critical edges with the reason: ``"essential 3-cycle"`` or
    ``"critical superface"``.

    Only edges with two triangular sides qualify.  Single faces and the
    complements of single triangles satisfy the inequality with equality in
    every graph; they are not counted as critical superfaces.
    """
    _require_alpha(g, alpha)
    tri = [all(g.faces[f].length == 3 for f in g.edge_faces[i]) and
           g.edge_faces[i][0] != g.edge_faces[i][1] for i in range(g.num_edges)]
    out: dict[int, str] = {}
    for x, y, z in essential_three_cycles(g):
        for a, b in ((x, y), (y, z), (x, z)):
            i = g.edge_between(a, b)
            if tri[i]:
                out.setdefault(i, "essential 3-cycle")
    t = scan(g, alpha, genus_cap, budget, 0, backend)
    mask = t["critical_edges"]
    for i in range(g.num_edges):
        if tri[i] and mask >> i & 1:
            out.setdefault(i, "critical superface")
    return dict(sorted(out.items()))


def is_tight_by_superfaces(g: EmbeddedGraph, alpha: int) -> bool:
    return g.freedom() == alpha and superface_sparsity_check(g, alpha)[0]


def brute_force_tight(g: EmbeddedGraph, alpha: int) -> bool:
    return g.freedom() == alpha and brute_force_sparse(g, alpha)


def subsets(xs, r):  # pragma: no cover - small helper kept for tests
    return combinations(xs, r)
