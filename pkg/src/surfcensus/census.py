"""Families of embedded graphs, contraction-minimality and minimal censuses."""

from __future__ import annotations

import hashlib
import json
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .gluing import MapGenerator, face_size_lists
from .maps import EmbeddedGraph, SurfaceClass, canonical_code, map_from_dict, parse_surface
from .sparsity import is_sparse
from .surgery import contract_edge, contraction_obstruction, split_choices, split_vertex

KINDS = ("triangulation", "partial", "girth-planar", "girth-genus", "tight6", "tight3")


class NotAMember(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def forced_alpha(surface: SurfaceClass, holes: Sequence[int] = ()) -> int:
    """The freedom forced by the face sizes: sum (k - 3) = 6 g_r + alpha - 6."""
    return 6 - 3 * surface.euler_genus + sum(k - 3 for k in holes)


@dataclass(frozen=True)
class FamilySpec:
    surface: SurfaceClass
    kind: str
    alpha: int
    holes: tuple = ()            # nontriangular face sizes, "partial" only
    genus_cap: int | None = None  # "girth-genus" only
    hole_count: int | None = None  # restrict censuses to this many nontriangular faces
    hole_sizes: tuple | None = None  # restrict censuses to exactly these nontriangular faces

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "tight6" and self.alpha != 6:
            raise ValueError("tight6 needs alpha = 6")
        if self.kind == "tight3" and self.alpha != 3:
            raise ValueError("tight3 needs alpha = 3")
        if self.kind == "triangulation" and self.alpha != forced_alpha(self.surface):
            raise ValueError(f"triangulations of {self.surface.name} have alpha = "
                             f"{forced_alpha(self.surface)}")
        if self.kind == "partial":
            if any(k < 4 for k in self.holes):
                raise ValueError("hole sizes must be at least 4")
            if self.alpha != forced_alpha(self.surface, self.holes):
                raise ValueError("alpha is inconsistent with the hole sizes")
        elif self.holes:
            raise ValueError("hole sizes only apply to partial triangulations")
        if self.genus_cap is not None and self.kind != "girth-genus":
            raise ValueError("a genus cap only applies to girth-genus families")

    @classmethod
    def make(cls, surface, kind: str, alpha: int | None = None, holes: Sequence[int] = (),
             genus_cap: int | None = None, hole_count: int | None = None,
             hole_sizes: Sequence[int] | None = None) -> "FamilySpec":
        if isinstance(surface, str):
            surface = parse_surface(surface)
        holes = tuple(sorted(holes, reverse=True))
        if alpha is None:
            alpha = {"tight6": 6, "tight3": 3}.get(kind)
            if alpha is None:
                alpha = forced_alpha(surface, holes)
        if kind == "girth-genus" and genus_cap is None:
            genus_cap = surface.genus
        if hole_sizes is not None:
            hole_sizes = tuple(sorted(hole_sizes, reverse=True))
        return cls(surface, kind, alpha, holes, genus_cap, hole_count, hole_sizes)

    @property
    def name(self) -> str:
        s = f"{self.kind}({self.surface.name}, alpha={self.alpha}"
        if self.holes:
            s += ", holes=" + "+".join(map(str, self.holes))
        if self.genus_cap is not None:
            s += f", cap={self.genus_cap}"
        return s + ")"

    def as_dict(self) -> dict:
        return {"surface": self.surface.name, "kind": self.kind, "alpha": self.alpha,
                "holes": list(self.holes), "genus_cap": self.genus_cap,
                "hole_count": self.hole_count,
                "hole_sizes": None if self.hole_sizes is None else list(self.hole_sizes)}

    def face_sizes(self, nverts: int) -> list[tuple[int, ...]]:
        if self.kind in ("triangulation", "partial"):
            out = face_size_lists(self.surface, nverts, self.alpha, self.holes)
        else:
            out = face_size_lists(self.surface, nverts, self.alpha, self.hole_sizes)
        if self.hole_count is not None:
            out = [fs for fs in out if sum(1 for k in fs if k > 3) == self.hole_count]
        return out


def _why_not_member(g: EmbeddedGraph, spec: FamilySpec) -> str | None:
    from . import girth

    if g.surface() != spec.surface:
        return "wrong surface"
    if not g.simple:
        return "not simple"
    holes = sorted((k for k in g.face_lengths() if k > 3), reverse=True)
    if spec.kind == "triangulation":
        return "nontriangular face" if holes else None
    if spec.kind == "partial":
        return None if tuple(holes) == spec.holes else "face sizes differ"
    if g.freedom() != spec.alpha:
        return f"freedom {g.freedom()} != {spec.alpha}"
    if spec.kind in ("tight6", "tight3"):
        return None if is_sparse(g, spec.alpha) else "sparsity violation"
    if spec.kind == "girth-planar":
        ok = girth.planar_girth_check(g, spec.alpha).satisfied
    else:
        ok = girth.higher_genus_girth_check(g, spec.alpha, spec.genus_cap).satisfied
    return None if ok else "girth violation"


def member_of(g: EmbeddedGraph, spec: FamilySpec) -> bool:
    """Does the (cellular) embedded graph ``g`` belong to the family?"""
    return _why_not_member(g, spec) is None


def is_contraction_minimal(g: EmbeddedGraph, spec: FamilySpec) -> tuple[bool, dict[int, str]]:
    """``(minimal, reasons)`` with one reason per edge.

    An edge that cannot be contracted gets ``"not contractible: ..."``; a
    contractible edge gets the reason its contraction leaves the family, or
    ``"contracts within family"``.
    """
    if not member_of(g, spec):
        raise NotAMember(f"not a member of {spec.name}")
    reasons = {}
    minimal = True
    for e in range(g.num_edges):
        why = contraction_obstruction(g, e)
        if why is not None:
            reasons[e] = "not contractible: " + why
            continue
        out = _why_not_member(contract_edge(g, e), spec)
        if out is None:
            reasons[e] = "contracts within family"
            minimal = False
        else:
            reasons[e] = out
    return minimal, reasons


def code_hex(g: EmbeddedGraph) -> str:
    return canonical_code(g).hex()


def code_key(code: str) -> str:
    """Short file-name key for a canonical code (hex)."""
    return hashlib.sha256(bytes.fromhex(code)).hexdigest()[:16]


# ---------------------------------------------------------------------------
# census


def _edge_witnesses(g: EmbeddedGraph, spec: FamilySpec) -> dict[int, str]:
    """Why each edge is needed: it borders a hole, is critical, or is neither."""
    from . import girth

    out = {}
    crit = {}
    if spec.kind not in ("triangulation", "partial"):
        cap = spec.genus_cap if spec.kind == "girth-genus" else None
        crit = girth.critical_edges(g, spec.alpha, cap)
    else:
        ess = girth.essential_three_cycles(g)
        for x, y, z in ess:
            for a, b in ((x, y), (y, z), (x, z)):
                crit.setdefault(g.edge_between(a, b), "essential 3-cycle")
    for e in range(g.num_edges):
        fa, fb = g.edge_faces[e]
        if g.faces[fa].length > 3 or g.faces[fb].length > 3:
            out[e] = "hole boundary"
        else:
            out[e] = crit.get(e, "none")
    return out


def diagnostics(g: EmbeddedGraph, spec: FamilySpec | None = None) -> dict:
    c = code_hex(g)
    d = {"code": c, "key": code_key(c), "v": g.n, "e": g.num_edges,
         "faces": list(g.face_multiset()), "signature": g.degree_signature(),
         "surface": g.surface().name, "freedom": g.freedom()}
    if spec is not None:
        d["edge_witness"] = {str(k): v for k, v in _edge_witnesses(g, spec).items()}
    return d


@dataclass
class CensusResult:
    spec: FamilySpec
    graphs: dict = field(default_factory=dict)         # code -> EmbeddedGraph
    max_vertices: int = 0
    exhaustive: bool = True
    counts: dict = field(default_factory=dict)         # v -> number of minimals
    members: dict = field(default_factory=dict)        # v -> number of members seen
    seconds: float = 0.0
    edge_witnesses: bool = False

    @property
    def codes(self) -> list[str]:
        return sorted(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def ordered(self) -> list[EmbeddedGraph]:
        return [self.graphs[c] for c in self.codes]

    def index(self) -> list[dict]:
        spec = self.spec if self.edge_witnesses else None
        return [diagnostics(self.graphs[c], spec) for c in self.codes]

    def to_json_dict(self) -> dict:
        return {"family": self.spec.as_dict(), "max_vertices": self.max_vertices,
                "exhaustive": self.exhaustive,
                "counts": {str(k): v for k, v in sorted(self.counts.items())},
                "members": {str(k): v for k, v in sorted(self.members.items())},
                "graphs": [dict(diagnostics(g), map=g.to_json_dict()) for g in self.ordered()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def index_lines(self) -> str:
        return "".join(json.dumps(r) + "\n" for r in self.index())

    def dot_bundle(self) -> dict[str, str]:
        from .export import to_dot
        return {code_key(c): to_dot(self.graphs[c], name="g" + code_key(c)) for c in self.codes}


def _minimal_filter(spec: FamilySpec) -> str | None:
    """Generator filter that realises the family and minimality exactly, or
    None when the girth checks have to run in Python."""
    if spec.kind in ("triangulation", "partial"):
        # every contraction of a contractible edge keeps all face sizes
        return "irreducible"
    if spec.kind in ("tight6", "tight3"):
        return "minimal"
    return None


def enumerate_minimal(spec: FamilySpec, max_vertices: int, min_vertices: int = 3,
                      budget_nodes: int | None = None, budget_seconds: float | None = None,
                      threads: int = 1, rule: str = "vertex", backend: str = "auto",
                      edge_witnesses: bool = False) -> CensusResult:
    """All contraction-minimal members of ``spec`` with at most
    ``max_vertices`` vertices, up to isomorphism.

    A budget that runs out marks the result non-exhaustive rather than
    raising.  The output does not depend on ``threads``.
    """
    if max_vertices < 3:
        raise ValueError("max_vertices must be at least 3")
    t0 = time.perf_counter()
    res = CensusResult(spec, max_vertices=max_vertices, edge_witnesses=edge_witnesses)
    keep = _minimal_filter(spec)
    jobs = [(v, fs) for v in range(max(3, min_vertices), max_vertices + 1)
            for fs in spec.face_sizes(v)]

    def run(job):
        v, fs = job
        left = None
        if budget_seconds is not None:
            left = max(0.0, budget_seconds - (time.perf_counter() - t0))
        gen = MapGenerator(spec.surface, v, fs, rule=rule, budget_nodes=budget_nodes,
                           budget_seconds=left, backend=backend,
                           keep=keep or "all", alpha=spec.alpha)
        maps = gen.run()
        members = gen.stats.members
        if keep is None:
            maps = [g for g in maps if member_of(g, spec)]
            members = len(maps)
            maps = [g for g in maps if is_contraction_minimal(g, spec)[0]]
        elif keep == "irreducible":
            members = gen.stats.unique
        return v, maps, members, gen.stats.exhausted

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            outs = list(pool.map(run, jobs))
    else:
        outs = [run(j) for j in jobs]
    for v in range(max(3, min_vertices), max_vertices + 1):
        res.counts[v] = 0
        res.members[v] = 0
    for v, maps, members, done in outs:
        res.exhaustive &= done
        res.members[v] += members
        for g in maps:
            c = code_hex(g)
            if c not in res.graphs:
                res.graphs[c] = g
                res.counts[v] += 1
    res.seconds = time.perf_counter() - t0
    return res


def enumerate_members(spec: FamilySpec, max_vertices: int, min_vertices: int = 3,
                      backend: str = "auto") -> list[EmbeddedGraph]:
    """All members of ``spec`` up to the bound (no minimality filter)."""
    out = []
    keep = "tight" if spec.kind in ("tight6", "tight3") else "all"
    for v in range(max(3, min_vertices), max_vertices + 1):
        for fs in spec.face_sizes(v):
            maps = MapGenerator(spec.surface, v, fs, keep=keep, alpha=spec.alpha,
                                backend=backend).run()
            if keep == "all":
                maps = [g for g in maps if member_of(g, spec)]
            out.extend(maps)
    return out


def expand_from_minimal(g: EmbeddedGraph, spec: FamilySpec, depth: int,
                        max_graphs: int | None = None) -> dict[str, EmbeddedGraph]:
    """Members reachable from ``g`` by at most ``depth`` vertex splits."""
    if not member_of(g, spec):
        raise NotAMember(f"not a member of {spec.name}")
    seen = {code_hex(g): g}
    frontier = [g]
    for _ in range(depth):
        nxt = []
        for h in frontier:
            for v, d1, d2 in split_choices(h):
                k = split_vertex(h, v, d1, d2)
                c = code_hex(k)
                if c in seen or not member_of(k, spec):
                    continue
                seen[c] = k
                nxt.append(k)
                if max_graphs is not None and len(seen) > max_graphs:
                    raise BudgetExceeded("too many graphs in the expansion")
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# fixtures


def torus_33_minimals() -> dict[str, EmbeddedGraph]:
    """The five 7-vertex contraction-minimal (3,3)-tight torus maps with one
    hexagonal face, keyed ``7v1`` .. ``7v5``."""
    text = resources.files("surfcensus.data").joinpath("torus33_7v.json").read_text()
    return {k: map_from_dict(v) for k, v in json.loads(text).items()}


def hole_count_census(res: CensusResult) -> Counter:
    return Counter(tuple(k for k in g.face_multiset() if k > 3) for g in res.ordered())
