"""Freedom counts and (3, alpha)-sparsity.

A graph is (3, alpha)-sparse when every subgraph ``H'`` satisfies
``3 v(H') - e(H') >= alpha``.  For ``alpha = 6`` only subgraphs with at least
three vertices are constrained (a single edge has freedom 5).

The decision procedure uses bounded out-degree orientations: a multigraph
has an orientation with every out-degree at most 3 exactly when each vertex
set ``X`` spans at most ``3 |X|`` edges.  Adding extra copies of edges on a
few chosen vertices turns this into the local count for the sets containing
them.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .maps import EmbeddedGraph


class PreconditionFGNotAlpha(ValueError):
    pass


def _as_graph(h) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(h, EmbeddedGraph):
        return h.n, [tuple(e) for e in h.ends]
    n, edges = h
    return n, [tuple(e) for e in edges]


def freedom(h) -> int:
    """``3 v - e`` for an :class:`EmbeddedGraph` or an ``(n, edges)`` pair."""
    n, edges = _as_graph(h)
    return 3 * n - len(edges)


def subset_freedom(edges: Sequence[tuple[int, int]], verts: Iterable[int]) -> int:
    vs = set(verts)
    return 3 * len(vs) - sum(1 for u, w in edges if u in vs and w in vs)


class _Orientation:
    """Out-degree <= 3 orientation of a multigraph, grown edge by edge."""

    __slots__ = ("out", "cap")

    def __init__(self, n: int, cap: int = 3):
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.cap = cap

    def copy(self) -> "_Orientation":
        o = _Orientation.__new__(_Orientation)
        o.out = [lst[:] for lst in self.out]
        o.cap = self.cap
        return o

    def insert(self, a: int, b: int) -> set | None:
        """Orient a new edge ``ab``.  On failure return the set of vertices
        reachable from ``a`` and ``b``; it spans more than ``3|R|`` edges."""
        out, cap = self.out, self.cap
        if len(out[a]) < cap:
            out[a].append(b)
            return None
        if len(out[b]) < cap:
            out[b].append(a)
            return None
        prev = {a: None, b: None}
        queue = deque((a, b))
        while queue:
            x = queue.popleft()
            for y in out[x]:
                if y in prev:
                    continue
                prev[y] = x
                if len(out[y]) < cap:
                    # reverse the path y <- ... <- root
                    z = y
                    while prev[z] is not None:
                        p = prev[z]
                        out[p].remove(z)
                        out[z].append(p)
                        z = p
                    if len(out[a]) < cap:
                        out[a].append(b)
                    else:
                        out[b].append(a)
                    return None
                queue.append(y)
        return set(prev)


def _base_orientation(n, edges):
    o = _Orientation(n)
    for u, w in edges:
        bad = o.insert(u, w)
        if bad is not None:
            return None, bad
    return o, None


def _tests(n, edges, alpha):
    """Vertex groups whose extra edges probe every minimal violating set."""
    adj = [set() for _ in range(n)]
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    seen = set()
    for u, w in edges:
        key = (min(u, w), max(u, w))
        if key in seen:
            continue
        seen.add(key)
        if alpha <= 3:
            yield key, [key] * alpha
            continue
        # a minimal violating set is connected with >= 3 vertices, so it holds
        # an edge uw and a third vertex adjacent to u or w
        for x in sorted((adj[u] | adj[w]) - {u, w}):
            trio = (key[0], key[1], x)
            extra = []
            per = alpha // 3
            for a, b in ((key[0], key[1]), (key[1], x), (key[0], x)):
                extra += [(a, b)] * per
            extra += [(key[0], key[1])] * (alpha - 3 * per)
            yield trio, extra


def _find_violation(n, edges, alpha):
    if alpha > 3 and n < 3:
        return None
    base, bad = _base_orientation(n, edges)
    if base is None:
        return bad
    done = set()
    for trio, extra in _tests(n, edges, alpha):
        fs = frozenset(trio)
        if fs in done:
            continue
        done.add(fs)
        o = base.copy()
        for a, b in extra:
            bad = o.insert(a, b)
            if bad is not None:
                return bad
    return None


def _induced(edges, verts):
    vs = sorted(verts)
    idx = {v: i for i, v in enumerate(vs)}
    return vs, [(idx[u], idx[w]) for u, w in edges if u in idx and w in idx]


def _minimise(n, edges, alpha, bad: set) -> frozenset:
    """Shrink a violating set until every one-vertex deletion is sparse."""
    current = set(bad)
    # drop vertices greedily while the count stays violated
    changed = True
    lim = 3 if alpha > 3 else 1
    while changed:
        changed = False
        for x in sorted(current):
            rest = current - {x}
            if len(rest) >= lim and subset_freedom(edges, rest) < alpha:
                current = rest
                changed = True
                break
    while True:
        for x in sorted(current):
            vs, sub = _induced(edges, current - {x})
            bad2 = _find_violation(len(vs), sub, alpha)
            if bad2 is not None:
                inner = {vs[i] for i in bad2}
                if subset_freedom(edges, inner) >= alpha:
                    inner = _shrink_oracle(edges, current - {x}, alpha)
                current = inner
                break
        else:
            return frozenset(current)


def _shrink_oracle(edges, verts, alpha):
    bad = brute_force_violation(edges, verts, alpha)
    return set(bad)


def is_sparse(h, alpha: int, certificate: bool = False):
    """Decide (3, alpha)-sparsity.

    With ``certificate=True`` return ``(ok, vertex_set)`` where the vertex
    set is an inclusion-minimal violating set (``None`` when sparse).
    """
    if alpha < 1:
        raise ValueError("alpha must be positive")
    n, edges = _as_graph(h)
    bad = _find_violation(n, edges, alpha)
    if bad is not None and subset_freedom(edges, bad) >= alpha:
        # the probe's reachable set overflows only once the extra copies are
        # counted; if some of them fall outside it, ask the oracle instead
        bad = _shrink_oracle(edges, range(n), alpha)
    if not certificate:
        return bad is None
    if bad is None:
        return True, None
    return False, sorted(_minimise(n, edges, alpha, bad))


def is_tight(h, alpha: int) -> bool:
    return freedom(h) == alpha and is_sparse(h, alpha)


# ---------------------------------------------------------------------------
# brute force reference


def _subset_counts(n: int, edges: Sequence[tuple[int, int]]):
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        sizes += (masks >> i) & 1
    ecount = np.zeros(1 << n, dtype=np.int64)
    for u, w in edges:
        m = (1 << u) | (1 << w)
        ecount += (masks & m) == m
    return masks, sizes, ecount


def brute_force_sparse(h, alpha: int) -> bool:
    """Reference check by enumerating every vertex subset."""
    n, edges = _as_graph(h)
    if n > 22:
        raise ValueError("brute force limited to 22 vertices")
    _, sizes, ecount = _subset_counts(n, edges)
    lim = 3 if alpha > 3 else 1
    ok = (sizes < lim) | (3 * sizes - ecount >= alpha)
    return bool(ok.all())


def brute_force_violation(edges, verts, alpha) -> list[int] | None:
    """Smallest violating subset of ``verts`` (fewest vertices, then
    lexicographic), or None."""
    vs = sorted(set(verts))
    lim = 3 if alpha > 3 else 1
    vset = set(vs)
    sub = [(u, w) for u, w in edges if u in vset and w in vset]
    for r in range(lim, len(vs) + 1):
        for comb in combinations(vs, r):
            if subset_freedom(sub, comb) < alpha:
                return list(comb)
    return None


# ---------------------------------------------------------------------------
# face counts


def face_count_identity(g: EmbeddedGraph, alpha: int | None = None) -> dict:
    """Evaluate both forms of the face-count identity.

    ``sum_k (k - 3) f_k = alpha + 3 mu g - 6`` and, over nontriangular face
    walks, ``sum (|c| - 3) = 6 g_r + f(G) - 6``.  Both reduce to Euler's
    formula once ``f(G) = alpha``; they are returned side by side.
    """
    f = freedom(g)
    if alpha is None:
        alpha = f
    if f != alpha:
        raise PreconditionFGNotAlpha(f"f(G) = {f}, expected {alpha}")
    surf = g.surface()
    lengths = g.face_lengths()
    by_size: dict[int, int] = {}
    for k in lengths:
        by_size[k] = by_size.get(k, 0) + 1
    lhs1 = sum((k - 3) * c for k, c in by_size.items())
    rhs1 = alpha + 3 * surf.mu * surf.genus - 6
    lhs2 = sum(k - 3 for k in lengths if k != 3)
    rhs2 = 3 * surf.euler_genus + f - 6   # 6 g_r = 3 (2 - chi)
    return {"alpha": alpha, "lhs": lhs1, "rhs": rhs1, "walk_lhs": lhs2, "walk_rhs": rhs2,
            "holds": lhs1 == rhs1 and lhs2 == rhs2}
