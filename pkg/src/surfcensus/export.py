"""DOT and SVG renderings of embedded graphs."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .maps import EmbeddedGraph


class UnsupportedSurface(ValueError):
    pass


def to_dot(g: EmbeddedGraph, name: str = "G") -> str:
    """Graphviz source: the graph, then one record node per face listing its
    boundary walk (vertices and edges)."""
    lines = [f"graph {name} {{",
             f'  label="{g.surface().name}, v={g.n}, e={g.num_edges}, f={len(g.faces)}";',
             "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  v{v} [label=\"{v}\"];")
    for i, (u, w) in enumerate(g.ends):
        style = ', style="dashed"' if g.signs[i] < 0 else ""
        lines.append(f'  v{u} -- v{w} [label="e{i}"{style}];')
    lines.append("  subgraph cluster_faces {")
    lines.append('    label="faces"; node [shape=record];')
    for k, w in enumerate(g.faces):
        verts = " ".join(str(g.tail[d]) for d in w.darts)
        edges = " ".join(str(d >> 1) for d in w.darts)
        lines.append(f'    f{k} [label="f{k}|len {w.length}|v: {verts}|e: {edges}"];')
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def polygon_schema(g: EmbeddedGraph):
    """Cut the surface open into one polygon.

    Faces are glued along a spanning tree of the dual graph.  Returns
    ``(sides, chords)``: ``sides`` is the boundary of the polygon as a
    cyclic list of ``(corner, u, w, edge)`` (a side from vertex ``u`` to
    ``w`` starting at corner id ``corner``), and ``chords`` are the glued
    edges as ``(corner_a, corner_b, edge)``.  Every edge not glued appears
    on exactly two sides, which are identified.
    """
    faces = g.faces
    counter = iter(range(10 ** 9))

    def walk_sides(f):
        return [(g.tail[d], g.tail[d ^ 1], d >> 1) for d in faces[f].darts]

    sides = [(next(counter),) + s for s in walk_sides(0)]
    inside = {0}
    chords = []
    changed = True
    while changed:
        changed = False
        for j, (c, x, y, i) in enumerate(sides):
            fa, fb = g.edge_faces[i]
            other = fb if fa in inside else fa
            if other in inside:
                continue
            new = walk_sides(other)
            k = next(t for t, s in enumerate(new) if s[2] == i)
            rot = new[k + 1:] + new[:k]            # from the head of i back to its tail
            if new[k][0] == x:                      # traversed the same way: reverse
                rot = [(w, u, e) for (u, w, e) in reversed(rot)]
            # rot now runs from x to y
            c_end = sides[(j + 1) % len(sides)][0]
            piece = []
            for t, (u, w, e) in enumerate(rot):
                piece.append((c if t == 0 else next(counter), u, w, e))
            sides[j:j + 1] = piece
            chords.append((c, c_end, i))
            inside.add(other)
            changed = True
            break
    return sides, chords


def to_svg(g: EmbeddedGraph, size: int = 480) -> str:
    """The map drawn inside its polygon schema.

    Boundary sides carrying the same edge label are identified (arrows give
    the direction from the lower to the higher endpoint of the edge).
    Supported for reduced genus at most 1.
    """
    if g.surface().euler_genus > 2:
        raise UnsupportedSurface("polygon layout is only drawn for reduced genus <= 1")
    sides, chords = polygon_schema(g)
    k = len(sides)
    r = size * 0.4
    cx = cy = size / 2
    pos = {}
    for t, (c, *_rest) in enumerate(sides):
        a = 2 * math.pi * t / k - math.pi / 2
        pos[c] = (cx + r * math.cos(a), cy + r * math.sin(a))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<defs><marker id="arr" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" '
           'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>',
           f'<text x="8" y="18" font-size="13">{escape(g.surface().name)}: '
           f'v={g.n} e={g.num_edges} f={len(g.faces)}</text>']
    for t, (c, u, w, e) in enumerate(sides):
        x1, y1 = pos[c]
        x2, y2 = pos[sides[(t + 1) % k][0]]
        if u > w:
            x1, y1, x2, y2 = x2, y2, x1, y1
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{mx:.1f}" y2="{my:.1f}" '
                   'stroke="black" stroke-width="2" marker-end="url(#arr)"/>')
        out.append(f'<line x1="{mx:.1f}" y1="{my:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                   'stroke="black" stroke-width="2"/>')
        lx, ly = cx + 1.1 * (mx - cx), cy + 1.1 * (my - cy)
        out.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="10" fill="blue" '
                   f'text-anchor="middle">e{e}</text>')
    for a, b, e in chords:
        (x1, y1), (x2, y2) = pos[a], pos[b]
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                   f'stroke="gray"><title>e{e}</title></line>')
    for t, (c, u, w, e) in enumerate(sides):
        x, y = pos[c]
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="9" fill="white" stroke="black"/>')
        out.append(f'<text x="{x:.1f}" y="{y + 4:.1f}" font-size="10" '
                   f'text-anchor="middle">{u}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
