"""Exhaustive generation of simple maps with a prescribed multiset of face sizes.

Maps are built by gluing polygons side to side.  The search starts from one
polygon of maximal size and repeatedly picks a free side by a fixed rule.
That side is then either glued to a brand new polygon or to another free
side.  For a given final map and a given root (a corner of a maximal polygon
together with an orientation) the sequence of decisions is forced, so every
rooted map is produced exactly once.  Isomorphic copies coming from
different roots are merged by canonical code.

Partial states are surfaces with boundary.  Corners are merged by a
union-find structure; each class is either a closed cycle of corners (an
interior vertex) or a chain whose two ends sit on free sides.  ``link``
pairs up those chain ends, which is all that is needed to follow boundary
components.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .maps import EmbeddedGraph, SurfaceClass, canonical_code, from_polygons
from .sparsity import is_sparse

try:
    from . import _gluecore
except ImportError:  # pragma: no cover - extension not built
    _gluecore = None


def native_available() -> bool:
    return _gluecore is not None


class BudgetExceeded(RuntimeError):
    pass


ANTI, PARA = 1, -1
KEEP_MODES = {"all": 0, "irreducible": 1, "tight": 2, "minimal": 3}


@dataclass
class GenStats:
    nodes: int = 0
    leaves: int = 0
    accepted: int = 0
    seconds: float = 0.0
    exhausted: bool = True
    unique: int = 0        # distinct maps before filtering
    members: int = 0       # distinct tight maps (tight and minimal filters)

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "leaves": self.leaves, "maps": self.accepted,
                "unique": self.unique, "members": self.members,
                "seconds": round(self.seconds, 3), "exhaustive": self.exhausted}


@dataclass
class _State:
    sizes: list            # polygon sizes placed so far
    base: list             # first side id of each polygon
    poly: list             # polygon of each side
    mate: list             # partner side or -1
    mode: list             # ANTI / PARA for glued sides
    link: dict             # chain end -> chain end, free sides only
    parent: list           # union-find over corners
    csize: list
    remaining: Counter     # polygon sizes still to place
    nverts: int            # corner classes
    nfree: int
    nglued: int            # glued sides (twice the glued edges)

    def copy(self) -> "_State":
        return _State(self.sizes[:], self.base[:], self.poly[:], self.mate[:],
                      self.mode[:], dict(self.link), self.parent[:], self.csize[:],
                      Counter(self.remaining), self.nverts, self.nfree, self.nglued)


def _find(parent, c):
    while parent[c] != c:
        c = parent[c]
    return c


class MapGenerator:
    """Generate every simple map on ``surface`` with ``nverts`` vertices and
    the given multiset of face sizes, up to isomorphism (reflections
    included).

    ``rule`` selects the free side processed next: ``"vertex"`` finishes the
    longest open corner chain first, ``"side"`` takes the free side with the
    smallest id.  Both give the same result; having two is a cross-check.

    ``backend`` is ``"native"`` (compiled core), ``"python"`` or ``"auto"``.

    ``keep`` filters the finished maps: ``"all"``, ``"irreducible"`` (no
    contractible edge), ``"tight"`` ((3, alpha)-tight) or ``"minimal"``
    (tight, and no contraction stays tight).
    """

    def __init__(self, surface: SurfaceClass, nverts: int, face_sizes: Sequence[int],
                 rule: str = "vertex", budget_nodes: int | None = None,
                 budget_seconds: float | None = None, backend: str = "auto",
                 sparse_alpha: int = 0, keep: str = "all", alpha: int = 6):
        if rule not in ("vertex", "side"):
            raise ValueError(f"unknown rule {rule!r}")
        if backend == "auto":
            backend = "native" if _gluecore is not None else "python"
        if backend == "native" and _gluecore is None:
            raise RuntimeError("compiled generator core is not available")
        if backend not in ("native", "python"):
            raise ValueError(f"unknown backend {backend!r}")
        if keep not in KEEP_MODES:
            raise ValueError(f"unknown filter {keep!r}")
        self.backend = backend
        self.keep = keep
        self.alpha = alpha
        # prune partial maps whose glued edges already break (3, alpha)-sparsity
        self.sparse_alpha = sparse_alpha
        self.surface = surface
        self.v = nverts
        self.sizes = sorted(face_sizes, reverse=True)
        self.rule = rule
        self.budget_nodes = budget_nodes
        self.budget_seconds = budget_seconds
        self.target_eg = surface.euler_genus
        self.allow_para = not surface.orientable
        self.stats = GenStats()
        self._found: dict[bytes, EmbeddedGraph] = {}
        self._t0 = 0.0

    # ------------------------------------------------------------------
    def run(self) -> list[EmbeddedGraph]:
        self._t0 = time.perf_counter()
        self._found = {}
        self._rejected: set = set()
        ok = self._feasible_counts()
        if ok and self.backend == "native":
            self._run_native()
        elif ok:
            k = self.sizes[0]
            rem = Counter(self.sizes)
            rem[k] -= 1
            st = _State([], [], [], [], [], {}, [], [], +rem, 0, 0, 0)
            self._add_polygon(st, k)
            for j in range(k):
                st.link[2 * j + 1] = 2 * ((j + 1) % k)
                st.link[2 * ((j + 1) % k)] = 2 * j + 1
            st.nverts = k
            st.nfree = k
            try:
                if self._prune(st):
                    self._dfs(st)
            except BudgetExceeded:
                self.stats.exhausted = False
        self.stats.seconds = time.perf_counter() - self._t0
        self.stats.accepted = len(self._found)
        return [self._found[c] for c in sorted(self._found)]

    def _run_native(self) -> None:
        res = _gluecore.generate(
            self.v, list(self.sizes), self.surface.euler_char, self.surface.orientable,
            0 if self.rule == "vertex" else 1,
            -1 if self.budget_nodes is None else int(self.budget_nodes),
            -1.0 if self.budget_seconds is None else float(self.budget_seconds),
            self.sparse_alpha, KEEP_MODES[self.keep], self.alpha)
        self.stats.nodes = res["nodes"]
        self.stats.leaves = res["leaves"]
        self.stats.exhausted = res["exhaustive"]
        self.stats.unique = res["unique"]
        self.stats.members = res["members"]
        for code, polys in res["maps"]:
            g = from_polygons(polys)
            self._found[canonical_code(g)] = g

    def codes(self) -> dict[bytes, EmbeddedGraph]:
        return dict(self._found)

    def _feasible_counts(self) -> bool:
        if not self.sizes or min(self.sizes) < 3 or sum(self.sizes) % 2:
            return False
        e = sum(self.sizes) // 2
        chi = self.v - e + len(self.sizes)
        return chi == self.surface.euler_char

    # ------------------------------------------------------------------
    @staticmethod
    def _add_polygon(st: _State, k: int) -> int:
        p = len(st.sizes)
        b = len(st.poly)
        st.sizes.append(k)
        st.base.append(b)
        for _ in range(k):
            st.poly.append(p)
            st.mate.append(-1)
            st.mode.append(0)
            st.parent.append(len(st.parent))
            st.csize.append(1)
        return b

    @staticmethod
    def _qcorner(st: _State, s: int) -> int:
        p = st.poly[s]
        b = st.base[p]
        return b + (s - b + 1) % st.sizes[p]

    def _end_corner(self, st: _State, x: int) -> int:
        s = x >> 1
        return self._qcorner(st, s) if x & 1 else s

    @staticmethod
    def _union(st: _State, a: int, b: int) -> None:
        pa, pb = st.parent, st.csize
        a = _find(pa, a)
        b = _find(pa, b)
        if a == b:
            return
        if pb[a] < pb[b]:
            a, b = b, a
        pa[b] = a
        pb[a] += pb[b]

    # ------------------------------------------------------------------
    def _attach(self, st: _State, s: int, k: int) -> _State:
        st = st.copy()
        st.remaining[k] -= 1
        if st.remaining[k] == 0:
            del st.remaining[k]
        b = self._add_polygon(st, k)
        ps, qs = s, self._qcorner(st, s)
        # antiparallel: corner b meets Q_s, corner b+1 meets P_s
        st.mate[s], st.mate[b] = b, s
        st.mode[s] = st.mode[b] = ANTI
        x = st.link.pop(2 * s)
        y = st.link.pop(2 * s + 1)
        st.link[x] = 2 * (b + 1)
        st.link[2 * (b + 1)] = x
        last = b + k - 1
        st.link[y] = 2 * last + 1
        st.link[2 * last + 1] = y
        for j in range(2, k):
            st.link[2 * (b + j - 1) + 1] = 2 * (b + j)
            st.link[2 * (b + j)] = 2 * (b + j - 1) + 1
        self._union(st, b, qs)
        self._union(st, b + 1, ps)
        st.nverts += k - 2
        st.nfree += k - 2
        st.nglued += 2
        return st

    def _glue(self, st: _State, s: int, t: int, mode: int) -> _State:
        st = st.copy()
        link = st.link
        sP, sQ, tP, tQ = 2 * s, 2 * s + 1, 2 * t, 2 * t + 1
        if mode == ANTI:
            g = {sP: tQ, tQ: sP, sQ: tP, tP: sQ}
        else:
            g = {sP: tP, tP: sP, sQ: tQ, tQ: sQ}
        before = set()
        for x in g:
            y = link[x]
            before.add((min(x, y), max(x, y)))
        seen = set()
        after = 0
        new_links = []
        for x in g:
            if x in seen:
                continue
            after += 1
            seen.add(x)
            ends = []
            # walk away from x along a link edge, then along the glue edge
            for use_link in (True, False):
                cur, lk = x, use_link
                while True:
                    nxt = link[cur] if lk else g[cur]
                    if nxt == x:
                        ends = None
                        break
                    if nxt not in g:
                        ends.append(nxt)
                        break
                    seen.add(nxt)
                    cur, lk = nxt, not lk
                if ends is None:
                    break
            if ends is not None:
                new_links.append(ends)
        for x in g:
            link.pop(x, None)
        for a, b in new_links:
            link[a] = b
            link[b] = a
        for x, y in g.items():
            if x < y:
                self._union(st, self._end_corner(st, x), self._end_corner(st, y))
        st.mate[s], st.mate[t] = t, s
        st.mode[s] = st.mode[t] = mode
        st.nverts += after - len(before)
        st.nfree -= 2
        st.nglued += 2
        return st

    # ------------------------------------------------------------------
    def _boundary_count(self, st: _State) -> int:
        link = st.link
        seen = set()
        b = 0
        for x in link:
            if x in seen:
                continue
            b += 1
            cur = x
            while cur not in seen:
                seen.add(cur)
                seen.add(cur ^ 1)
                cur = link[cur ^ 1]
        return b

    def _prune(self, st: _State) -> bool:
        """True when ``st`` may still complete to a valid map."""
        v = self.v
        rem_excess = sum((k - 2) * c for k, c in st.remaining.items())
        if st.nverts - st.nfree > v or st.nverts + rem_excess < v:
            return False
        if st.nfree == 0 and st.remaining:
            return False
        parent = st.parent
        roots = [_find(parent, c) for c in range(len(parent))]
        closed = 0
        if st.nfree:
            open_roots = {roots[self._end_corner(st, x)] for x in st.link}
            closed = len({r for r in roots}) - len(open_roots)
        else:
            closed = st.nverts
        if closed > v:
            return False
        glued: set = set()
        free: Counter = Counter()
        mate, poly, base, sizes = st.mate, st.poly, st.base, st.sizes
        for s in range(len(mate)):
            t = mate[s]
            if 0 <= t < s:
                continue
            p = poly[s]
            b = base[p]
            a = roots[s]
            c = roots[b + (s - b + 1) % sizes[p]]
            if a == c:
                return False
            key = (a, c) if a < c else (c, a)
            if t < 0:
                free[key] += 1
            else:
                if key in glued:
                    return False
                glued.add(key)
        for key, m in free.items():
            if m >= 3 or key in glued:
                return False
        chi = st.nverts - (st.nglued // 2 + st.nfree) + len(st.sizes)
        b = self._boundary_count(st) if st.nfree else 0
        if 2 - chi - b > self.target_eg:
            return False
        if self.sparse_alpha:
            cid: dict[int, int] = {}
            edges = []
            for s in range(len(mate)):
                t = mate[s]
                if t > s:
                    p = poly[s]
                    q = base[p] + (s - base[p] + 1) % sizes[p]
                    edges.append((cid.setdefault(roots[s], len(cid)),
                                  cid.setdefault(roots[q], len(cid))))
            if len(cid) >= 2 and not is_sparse((len(cid), edges), self.sparse_alpha):
                return False
        return True

    def _choose(self, st: _State) -> int:
        if self.rule == "side":
            return min(st.link) >> 1
        best, best_key = -1, None
        parent, csize = st.parent, st.csize
        for x in st.link:
            r = _find(parent, self._end_corner(st, x))
            key = (-csize[r], x)
            if best_key is None or key < best_key:
                best_key, best = key, x
        return best >> 1

    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.budget_nodes is not None and self.stats.nodes > self.budget_nodes:
            raise BudgetExceeded("node budget exhausted")
        if (self.budget_seconds is not None and self.stats.nodes % 1024 == 0
                and time.perf_counter() - self._t0 > self.budget_seconds):
            raise BudgetExceeded("time budget exhausted")

    def _dfs(self, st: _State) -> None:
        self._tick()
        if st.nfree == 0:
            self._leaf(st)
            return
        s = self._choose(st)
        for k in sorted(st.remaining, reverse=True):
            child = self._attach(st, s, k)
            if self._prune(child):
                self._dfs(child)
        frees = sorted({x >> 1 for x in st.link})
        modes = (ANTI, PARA) if self.allow_para else (ANTI,)
        for t in frees:
            if t == s:
                continue
            for m in modes:
                child = self._glue(st, s, t, m)
                if self._prune(child):
                    self._dfs(child)

    def _leaf(self, st: _State) -> None:
        self.stats.leaves += 1
        if st.remaining or st.nverts != self.v:
            return
        chi = st.nverts - st.nglued // 2 + len(st.sizes)
        if chi != self.surface.euler_char:
            return
        roots = [_find(st.parent, c) for c in range(len(st.parent))]
        label: dict[int, int] = {}
        polys = []
        for p, k in enumerate(st.sizes):
            b = st.base[p]
            polys.append([label.setdefault(roots[b + j], len(label)) for j in range(k)])
        g = from_polygons(polys)
        if g.is_orientable() != self.surface.orientable:
            return
        code = canonical_code(g)
        if code in self._found or code in self._rejected:
            return
        self.stats.unique += 1
        if self._passes(g):
            self._found[code] = g
        else:
            self._rejected.add(code)

    def _passes(self, g: EmbeddedGraph) -> bool:
        if self.keep == "all":
            return True
        if self.keep != "irreducible":
            if g.freedom() != self.alpha or not is_sparse(g, self.alpha):
                return False
            self.stats.members += 1
            if self.keep == "tight":
                return True
        from .surgery import contract_edge, contractible_edges
        edges = contractible_edges(g)
        if self.keep == "irreducible":
            return not edges
        return not any(is_sparse(contract_edge(g, e), self.alpha) for e in edges)


def generate_maps(surface: SurfaceClass, nverts: int, face_sizes: Sequence[int],
                  rule: str = "vertex", **kw) -> list[EmbeddedGraph]:
    return MapGenerator(surface, nverts, face_sizes, rule=rule, **kw).run()


def hole_multisets(total: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into parts ``k - 3``, returned as face sizes
    ``k`` in descending order."""
    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), min_part - 1, -1):
            for rest in parts(n - p, p):
                yield (p,) + rest
    for pt in parts(total, total):
        yield tuple(p + 3 for p in pt)


def face_size_lists(surface: SurfaceClass, nverts: int, alpha: int,
                    holes: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """All face-size multisets of cellular maps on ``surface`` with
    ``nverts`` vertices and freedom ``alpha``.

    The nontriangular faces satisfy ``sum(k - 3) = alpha + 6 g_r - 6``.
    If ``holes`` is given only that hole multiset is used.
    """
    e = 3 * nverts - alpha
    d = alpha + 3 * surface.euler_genus - 6
    if d < 0 or e < 3:
        return []
    options = [tuple(sorted(holes, reverse=True))] if holes is not None else list(hole_multisets(d))
    out = []
    for h in options:
        if sum(k - 3 for k in h) != d:
            continue
        rest = 2 * e - sum(h)
        if rest < 0 or rest % 3:
            continue
        out.append(tuple(h) + (3,) * (rest // 3))
    return out
