"""Check, enumerate and transform graphs embedded on surfaces.

Every verb writes one JSON document to stdout and a short summary to
stderr.  Exit codes: 0 success (or property true), 1 property false (the
JSON carries the certificate), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import girth
from .census import (FamilySpec, NotAMember, code_hex, code_key, enumerate_minimal,
                     is_contraction_minimal, member_of)
from .export import UnsupportedSurface, to_dot, to_svg
from .maps import MapError, from_canonical_tuple, canonical_tuple, parse_surface, read_map_json
from .rigidity import DEFAULT_SEED, generic_rank_probe, probe_census
from .sparsity import PreconditionFGNotAlpha, face_count_identity, is_sparse
from .surgery import NotContractible, InvalidSplit, contract_edge, split_vertex

FAMILY_KINDS = {"triangulation": "triangulation", "partial": "partial",
                "girth-planar": "girth-planar", "girth-genus": "girth-genus",
                "tight6": "tight6", "tight3": "tight3"}


class UsageError(Exception):
    pass


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _read_map(path: str, lenient: bool):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return read_map_json(text, lenient=lenient)


def parse_hole_multiset(text: str) -> tuple[int, ...]:
    """``4:2,5:1`` -> (5, 4, 4)."""
    out = []
    for part in text.split(","):
        size, _, count = part.partition(":")
        try:
            k, c = int(size), int(count or 1)
        except ValueError:
            raise UsageError(f"bad hole multiset {text!r}") from None
        if k < 4 or c < 0:
            raise UsageError(f"bad hole multiset {text!r}")
        out += [k] * c
    return tuple(sorted(out, reverse=True))


def _family(args, surface) -> FamilySpec:
    holes = parse_hole_multiset(args.hole_multiset) if args.hole_multiset else None
    kind = args.family
    try:
        return FamilySpec.make(surface, kind, alpha=args.alpha,
                               holes=(holes or ()) if kind == "partial" else (),
                               genus_cap=args.genus_cap, hole_count=args.holes,
                               hole_sizes=None if kind == "partial" else holes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# verbs


def cmd_check(args) -> int:
    g = _read_map(args.map, args.lenient)
    if g.num_edges > args.max_subgraph_edges and args.family in ("girth-planar", "girth-genus"):
        raise UsageError(f"{g.num_edges} edges exceed --max-subgraph-edges")
    surf = g.surface()
    rep = {"surface": surf.as_dict(), "cellular": True, "v": g.n, "e": g.num_edges,
           "freedom": g.freedom(), "faces": list(g.face_multiset()),
           "signature": g.degree_signature(), "code": code_hex(g)}
    ok = True
    if args.identity:
        try:
            idt = face_count_identity(g, args.alpha)
        except PreconditionFGNotAlpha as exc:
            idt = {"holds": False, "error": str(exc)}
        rep["identity"] = idt
        ok &= idt["holds"]
    if args.family:
        spec = _family(args, args.surface and parse_surface(args.surface) or surf)
        fam = {"family": spec.as_dict()}
        if spec.kind in ("tight6", "tight3") and g.freedom() == spec.alpha:
            sparse, bad = is_sparse(g, spec.alpha, certificate=True)
            if not sparse:
                fam["violating_vertices"] = sorted(bad)
        if spec.kind in ("girth-planar", "girth-genus") and g.freedom() == spec.alpha:
            cap = spec.genus_cap if spec.kind == "girth-genus" else None
            r = (girth.planar_girth_check(g, spec.alpha) if spec.kind == "girth-planar"
                 else girth.higher_genus_girth_check(g, spec.alpha, cap))
            fam["girth"] = r.to_json_dict()
        member = member_of(g, spec)
        fam["member"] = member
        if member:
            minimal, reasons = is_contraction_minimal(g, spec)
            fam["minimal"] = minimal
            fam["edge_reasons"] = {str(k): v for k, v in reasons.items()}
        ok &= member
        rep["membership"] = fam
        _say(f"{spec.name}: member={member}" + (f", minimal={fam['minimal']}" if member else ""))
    _say(f"{surf.name}: v={g.n} e={g.num_edges} f(G)={g.freedom()} faces={list(g.face_multiset())}")
    _emit(rep)
    return 0 if ok else 1


def cmd_faces(args) -> int:
    g = _read_map(args.map, args.lenient)
    rows = [{"face": k, "length": w.length, "darts": list(w.darts), "eps": list(w.eps),
             "vertices": [g.tail[d] for d in w.darts]} for k, w in enumerate(g.faces)]
    _say(f"{len(rows)} faces, sizes {list(g.face_multiset())}")
    _emit({"surface": g.surface().as_dict(), "faces": rows})
    return 0


def cmd_enumerate(args) -> int:
    surface = parse_surface(args.surface)
    spec = _family(args, surface)
    res = enumerate_minimal(spec, args.max_vertices, budget_nodes=args.budget_nodes,
                            budget_seconds=args.budget_seconds, threads=args.threads,
                            edge_witnesses=args.witnesses)
    if args.out:
        out = Path(args.out)
        (out / "maps").mkdir(parents=True, exist_ok=True)
        (out / "index.jsonl").write_text(res.index_lines())
        for c in res.codes:
            (out / "maps" / f"{code_key(c)}.json").write_text(res.graphs[c].to_json() + "\n")
    doc = res.to_json_dict()
    _say(f"{spec.name}: {len(res)} contraction-minimal graph(s) with v <= {args.max_vertices}"
         + ("" if res.exhaustive else " (budget exhausted, not exhaustive)"))
    _emit(doc)
    return 0


def cmd_contract(args) -> int:
    g = _read_map(args.map, args.lenient)
    try:
        h = contract_edge(g, args.edge)
    except NotContractible as exc:
        _say(str(exc))
        _emit({"contracted": False, "reason": str(exc)})
        return 1
    _say(f"contracted edge {args.edge}: v={h.n} e={h.num_edges}")
    _emit(h.to_json_dict())
    return 0


def cmd_split(args) -> int:
    g = _read_map(args.map, args.lenient)
    try:
        h = split_vertex(g, args.vertex, args.darts[0], args.darts[1])
    except InvalidSplit as exc:
        _say(str(exc))
        _emit({"split": False, "reason": str(exc)})
        return 1
    _say(f"split vertex {args.vertex}: v={h.n} e={h.num_edges}")
    _emit(h.to_json_dict())
    return 0


def cmd_canon(args) -> int:
    g = _read_map(args.map, args.lenient)
    h = from_canonical_tuple(canonical_tuple(g))
    _say(f"canonical code {code_hex(g)[:16]}...")
    _emit({"code": code_hex(g), "map": h.to_json_dict()})
    return 0


def cmd_probe(args) -> int:
    if args.census:
        graphs = []
        for line in Path(args.census).read_text().splitlines():
            if line.strip():
                graphs.append(_map_of_index_row(json.loads(line), Path(args.census).parent))
        rep = probe_census(graphs, args.trials, args.seed)
        _say(f"{len(graphs)} graphs, {len(rep['short'])} fall short of minimal rigidity")
        _emit(rep)
        return 0 if rep["all_minimally_rigid"] else 1
    if not args.map:
        raise UsageError("probe needs a map file or --census")
    g = _read_map(args.map, args.lenient)
    pr = generic_rank_probe(g, args.trials, args.seed)
    _say(f"rank {pr.rank} of {pr.bound}" + (", minimally rigid" if pr.minimally_rigid else ""))
    _emit(pr.as_dict())
    return 0 if pr.rigid else 1


def _map_of_index_row(row: dict, base: Path):
    if "map" in row:
        from .maps import map_from_dict
        return map_from_dict(row["map"])
    return read_map_json((base / "maps" / f"{row['key']}.json").read_text())


def cmd_export(args) -> int:
    src = Path(args.input)
    if src.is_dir():
        graphs = [_map_of_index_row(json.loads(l), src)
                  for l in (src / "index.jsonl").read_text().splitlines() if l.strip()]
    else:
        graphs = [_read_map(args.input, args.lenient)]
    files = {}
    for g in graphs:
        c = code_key(code_hex(g))
        files[f"{c}.dot"] = to_dot(g, "g" + c)
        if args.svg:
            files[f"{c}.svg"] = to_svg(g)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, text in files.items():
            (out / k).write_text(text)
    _say(f"{len(files)} file(s)" + (f" written to {args.out}" if args.out else ""))
    _emit({"files": sorted(files), "contents": files if not args.out else None})
    return 0


# ---------------------------------------------------------------------------


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=sorted(FAMILY_KINDS))
    p.add_argument("--alpha", type=int)
    p.add_argument("--genus-cap", type=int)
    p.add_argument("--holes", type=int, help="number of nontriangular faces")
    p.add_argument("--hole-multiset", help="nontriangular face sizes, e.g. 4:2,5:1")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lenient", action="store_true", help="ignore unknown map file fields")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--threads", type=int, default=1)
    p = argparse.ArgumentParser(prog="surfcensus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", parents=[common], help="diagnose a map file")
    c.add_argument("map")
    c.add_argument("--surface", help="expected surface (defaults to the map's own)")
    c.add_argument("--identity", action="store_true", help="evaluate the face-count identity")
    c.add_argument("--max-subgraph-edges", type=int, default=64)
    _family_flags(c)
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("faces", parents=[common], help="list face boundary walks")
    f.add_argument("map")
    f.set_defaults(func=cmd_faces)

    e = sub.add_parser("enumerate", parents=[common], help="census of contraction-minimal members")
    e.add_argument("--surface", required=True)
    e.add_argument("--max-vertices", type=int, default=8)
    e.add_argument("--budget-nodes", type=int)
    e.add_argument("--budget-seconds", type=float)
    e.add_argument("--out", help="directory for index.jsonl and maps/")
    e.add_argument("--witnesses", action="store_true", help="per-edge criticality witnesses")
    _family_flags(e)
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("contract", parents=[common], help="contract an edge")
    k.add_argument("map")
    k.add_argument("--edge", type=int, required=True)
    k.set_defaults(func=cmd_contract)

    s = sub.add_parser("split", parents=[common], help="split a vertex")
    s.add_argument("map")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--darts", type=int, nargs=2, required=True, metavar=("D1", "D2"))
    s.set_defaults(func=cmd_split)

    n = sub.add_parser("canon", parents=[common], help="canonical code and relabelled map")
    n.add_argument("map")
    n.set_defaults(func=cmd_canon)

    r = sub.add_parser("probe", parents=[common], help="randomised rigidity probe")
    r.add_argument("map", nargs="?")
    r.add_argument("--census", help="index.jsonl of a census")
    r.add_argument("--trials", type=int, default=2)
    r.set_defaults(func=cmd_probe)

    x = sub.add_parser("export", parents=[common], help="DOT (and SVG) renderings")
    x.add_argument("input", help="map file or census directory")
    x.add_argument("--svg", action="store_true")
    x.add_argument("--out")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.verb == "enumerate" and not args.family:
        _say("enumerate needs --family")
        return 2
    try:
        return args.func(args)
    except (UsageError, OSError, MapError, NotAMember, UnsupportedSurface, PreconditionFGNotAlpha,
            ValueError) as exc:
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
