"""Randomised generic rigidity probe over a prime field.

The rigidity matrix of a graph in 3-space has one row per edge uw with
``p(u) - p(w)`` in the columns of ``u`` and ``p(w) - p(u)`` in those of
``w``.  Its generic rank is the rank at a generic configuration; the rank at
a random configuration over GF(p) never exceeds it, and by the
Schwartz-Zippel lemma falls short with probability at most ``deg / p`` per
trial, where ``deg`` (at most ``3v - 6``) bounds the degree of a nonzero
maximal minor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

PRIME = (1 << 61) - 1
DEFAULT_SEED = 20240229


def _graph(h) -> tuple[int, list[tuple[int, int]]]:
    if hasattr(h, "abstract_edges"):
        return h.n, h.abstract_edges()
    n, edges = h
    return n, [tuple(e[:2]) for e in edges]


def rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        pr = [x * inv % p for x in rows[rank]]
        rows[rank] = pr
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rigidity_matrix(n: int, edges: Sequence[tuple[int, int]], coords, p: int = PRIME) -> list[list[int]]:
    rows = []
    for u, w in edges:
        r = [0] * (3 * n)
        for k in range(3):
            d = (coords[u][k] - coords[w][k]) % p
            r[3 * u + k] = d
            r[3 * w + k] = (-d) % p
        rows.append(r)
    return rows


@dataclass
class RigidityProbe:
    n: int
    e: int
    rank: int
    trials: int
    seed: int
    ranks: list = field(default_factory=list)

    @property
    def bound(self) -> int:
        """Rank of a generically rigid graph: ``3v - 6`` (``e`` for v < 3)."""
        return 3 * self.n - 6 if self.n >= 3 else self.e

    @property
    def rigid(self) -> bool:
        return self.rank == self.bound

    @property
    def minimally_rigid(self) -> bool:
        return self.e == self.bound and self.rank == self.bound

    @property
    def failure_probability(self) -> float:
        """Bound on the chance that a generically rigid graph probes short."""
        return (max(self.bound, 1) / PRIME) ** self.trials

    def as_dict(self) -> dict:
        return {"v": self.n, "e": self.e, "rank": self.rank, "bound": self.bound,
                "rigid": self.rigid, "minimally_rigid": self.minimally_rigid,
                "trials": self.trials, "seed": self.seed,
                "failure_probability": self.failure_probability}


def generic_rank_probe(h, trials: int = 2, seed: int = DEFAULT_SEED) -> RigidityProbe:
    """Rank of the rigidity matrix, maximised over ``trials`` random
    configurations.  Accepts an EmbeddedGraph or ``(n, edges)``."""
    n, edges = _graph(h)
    if n < 3:
        raise ValueError("the probe needs at least 3 vertices")
    if len(set(map(frozenset, edges))) != len(edges) or any(u == w for u, w in edges):
        raise ValueError("the probe needs a simple graph")
    rng = random.Random(seed)
    ranks = []
    for _ in range(trials):
        coords = [[rng.randrange(PRIME) for _ in range(3)] for _ in range(n)]
        ranks.append(rank_mod_p(rigidity_matrix(n, edges, coords)))
    return RigidityProbe(n, len(edges), max(ranks), trials, seed, ranks)


def probe_census(graphs: Iterable, trials: int = 2, seed: int = DEFAULT_SEED) -> dict:
    """Probe every graph; members that fall short are listed, never claimed
    flexible with certainty."""
    rows = []
    short = []
    for k, g in enumerate(graphs):
        pr = generic_rank_probe(g, trials, seed)
        rows.append(pr.as_dict())
        if not pr.minimally_rigid:
            short.append(k)
    return {"graphs": rows, "short": short, "all_minimally_rigid": not short,
            "seed": seed, "trials": trials, "prime": PRIME}


def double_banana() -> tuple[int, list[tuple[int, int]]]:
    """Two copies of K5 sharing the edge 01, with that edge deleted."""
    a = [0, 1, 2, 3, 4]
    b = [0, 1, 5, 6, 7]
    edges = set()
    for grp in (a, b):
        for i in range(5):
            for j in range(i + 1, 5):
                edges.add((grp[i], grp[j]))
    edges.discard((0, 1))
    return 8, sorted(edges)
