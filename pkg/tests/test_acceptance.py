"""Acceptance criteria 1-11.  Each test records one PASS/FAIL line that is
printed in the terminal summary."""
import random
import time
from collections import Counter
from itertools import combinations

import pytest

from surfcensus import girth, maps
from surfcensus.census import (FamilySpec, enumerate_minimal, is_contraction_minimal, member_of,
                               torus_33_minimals)
from surfcensus.gluing import MapGenerator, face_size_lists
from surfcensus.maps import canonical_code, isomorphic, parse_surface
from surfcensus.rigidity import double_banana, generic_rank_probe, probe_census
from surfcensus.sparsity import brute_force_sparse, face_count_identity, is_sparse
from surfcensus.surgery import contract_edge, contraction_obstruction, split_choices, split_vertex
from conftest import BASES, random_splits, record

pytestmark = pytest.mark.acceptance


def size_lists(total, k, lo=3):
    """Nonincreasing k-tuples of integers >= lo summing to total."""
    def rec(t, k, mx):
        if k == 0:
            if t == 0:
                yield ()
            return
        for a in range(min(mx, t - lo * (k - 1)), lo - 1, -1):
            yield from ((a,) + r for r in rec(t - a, k - 1, a))
    return list(rec(total, k, total))


# ---------------------------------------------------------------------------
# shared runs


@pytest.fixture(scope="session")
def projective_census():
    return enumerate_minimal(FamilySpec.make("P2", "tight6"), 8)


@pytest.fixture(scope="session")
def single_hole_census():
    return enumerate_minimal(FamilySpec.make("T2", "tight6", hole_count=1), 9)


@pytest.fixture(scope="session")
def torus_members():
    # every torus map with v <= 7 over all face-size lists allowed by Euler's
    # formula alone, kept when (3,6)-tight
    t = parse_surface("T2")
    out = []
    for v in range(3, 8):
        for e in range(v + 1, v * (v - 1) // 2 + 1):
            for fs in size_lists(2 * e, e - v):
                out.extend(MapGenerator(t, v, fs, keep="tight", alpha=6).run())
    return out


@pytest.fixture(scope="session")
def battery():
    """Every cellular map with v <= 7 and f(G) = alpha on S2, P2, T2 and the
    Klein bottle (both orientabilities at chi = 0)."""
    t0 = time.perf_counter()
    tally = Counter()
    for sname, alpha in [("S2", 6), ("P2", 3), ("P2", 6), ("T2", 3), ("T2", 6),
                         ("K2", 3), ("K2", 6)]:
        surf = parse_surface(sname)
        for v in range(3, 8):
            for fs in face_size_lists(surf, v, alpha):
                for g in MapGenerator(surf, v, fs).run():
                    r = girth.scan(g, alpha)
                    tight = brute_force_sparse(g, alpha)
                    tally["maps"] += 1
                    tally["tight"] += tight
                    tally["superfaces"] += r["superfaces"]
                    tally["length_vs_exterior"] += r["planar_mismatch"]
                    tally["genus_vs_complement"] += r["balanced_simple_mismatch"]
                    tally["balanced_vs_all"] += (r["balanced_violations"] == 0) != (r["violations"] == 0)
                    miss = (r["sparsity_violations"] == 0) != tight
                    tally["closure_sparsity_vs_brute"] += miss
                    tally[f"closure:{sname}/{alpha}"] += miss
                    tally["exterior_sparsity_vs_brute"] += (r["exterior_violations"] == 0) != tight
                    tally["girth_family_vs_tight"] += (r["balanced_violations"] == 0) != tight
                    tally["addition_failures"] += r["addition_failures"]
                    tally["addition_checked"] += r["addition_checked"]
                    tally["identity_failures"] += not face_count_identity(g, alpha)["holds"]
    tally["seconds"] = round(time.perf_counter() - t0)
    return tally


# ---------------------------------------------------------------------------


def test_criterion_01_sphere():
    t0 = time.perf_counter()
    res = enumerate_minimal(FamilySpec.make("S2", "triangulation"), 6)
    dt = time.perf_counter() - t0
    gs = res.ordered()
    ok = len(gs) == 1 and isomorphic(gs[0], maps.k3_sphere()) and res.exhaustive and dt < 1
    record(1, ok, f"S2 triangulations, v <= 6: {len(gs)} minimal (K3), {dt:.2f}s")
    assert ok


def test_criterion_02_projective_triangulations():
    res = enumerate_minimal(FamilySpec.make("P2", "triangulation"), 8)
    ok = len(res) == 2 and res.exhaustive and res.counts[8] == 0
    record(2, ok, f"P2 triangulations, v <= 8: {len(res)} minimal, by v {res.counts}")
    assert ok


def test_criterion_03_projective_tight(projective_census):
    res = projective_census
    ok = len(res) == 8 and res.exhaustive and res.counts[8] == 0
    record(3, ok, f"P2 (3,6)-tight, v <= 8: {len(res)} minimal, by v {res.counts}, "
                  f"{res.seconds:.0f}s")
    assert ok


def test_criterion_04_single_hole(single_hole_census, torus_members):
    single = [g for g in torus_members if sum(1 for k in g.face_lengths() if k > 3) == 1]
    sizes = Counter(max(g.face_lengths()) for g in single)
    res = single_hole_census
    ok = (set(sizes) == {9} and len(res) == 2 and res.exhaustive
          and all(max(g.face_lengths()) == 9 for g in res.ordered()))
    record(4, ok, f"torus single hole: sizes {dict(sizes)} over {len(single)} members (v <= 7); "
                  f"{len(res)} minimal with v <= 9, by v {res.counts}")
    assert ok


LISTED = {(4, 4, 4, 4, 4, 4), (5, 4, 4, 4, 4), (5, 5, 4, 4), (5, 5, 5), (6, 4, 4, 4), (6, 5, 4),
          (6, 6), (7, 4, 4), (7, 5), (8, 4), (9,)}


def test_criterion_05_torus_face_sizes(torus_members):
    seen = Counter(tuple(sorted((k for k in g.face_lengths() if k > 3), reverse=True))
                   for g in torus_members)
    bad = {k: n for k, n in seen.items() if k not in LISTED}
    ok = not bad and len(torus_members) > 0
    record(5, ok, f"{len(torus_members)} torus (3,6)-tight members (v <= 7), "
                  f"{len(seen)} distinct hole multisets, {len(bad)} outside the list")
    assert ok


SIGNATURES = {"7v1": "6^3 5^2 4^2", "7v2": "6 5^6", "7v3": "6^3 5 4^3",
              "7v4": "6 5^5 4", "7v5": "6 5^6"}


def degree_sum(signature):
    total = 0
    for part in signature.split():
        d, _, k = part.partition("^")
        total += int(d) * int(k or 1)
    return total


def test_criterion_06_torus_33_fixtures():
    spec = FamilySpec.make("T2", "tight3")
    fx = torus_33_minimals()
    rows = []
    ok = True
    for name in sorted(SIGNATURES):
        g = fx[name]
        good = member_of(g, spec) and is_contraction_minimal(g, spec)[0]
        sig = g.degree_signature() == SIGNATURES[name]
        ok &= good and sig
        note = "ok"
        if not sig:
            note = (f"{g.degree_signature()} (expected {SIGNATURES[name]}, "
                    f"degree sum {degree_sum(SIGNATURES[name])})")
        rows.append(f"{name} minimal={good} signature={note}")
    record(6, ok, "; ".join(rows))
    assert ok


def test_criterion_07_equivalence_battery(battery):
    keys = ["length_vs_exterior", "genus_vs_complement", "balanced_vs_all",
            "closure_sparsity_vs_brute", "girth_family_vs_tight"]
    ok = all(battery[k] == 0 for k in keys) and battery["seconds"] <= 1800
    detail = ", ".join(f"{k}={battery[k]}" for k in keys)
    where = {k.split(":")[1]: n for k, n in battery.items() if k.startswith("closure:") and n}
    if where:
        detail += f" {where}"
    record(7, ok, f"{battery['maps']} maps ({battery['tight']} tight), "
                  f"{battery['superfaces']} superfaces: {detail}; "
                  f"exterior_sparsity_vs_brute={battery['exterior_sparsity_vs_brute']}; "
                  f"{battery['seconds']}s")
    assert ok


def test_criterion_08_identities(battery):
    rng = random.Random(8)
    split_fail = 0
    for name in sorted(BASES):
        for k in range(8):
            g = random_splits(BASES[name](), k, rng)
            split_fail += not face_count_identity(g)["holds"]
    ok = battery["identity_failures"] == 0 and battery["addition_failures"] == 0 and not split_fail
    record(8, ok, f"identity failures {battery['identity_failures']} on {battery['maps']} maps "
                  f"and {split_fail} on split maps; addition formula failures "
                  f"{battery['addition_failures']} of {battery['addition_checked']}")
    assert ok


def test_criterion_09_round_trip():
    rng = random.Random(9)
    done = skipped = bad = freedom_bad = 0
    names = sorted(BASES)
    while done < 500:
        g = random_splits(BASES[rng.choice(names)](), rng.randint(0, 4), rng)
        v, d1, d2 = rng.choice(split_choices(g))
        h = split_vertex(g, v, d1, d2)
        freedom_bad += h.freedom() != g.freedom()
        e = h.edge_between(v, h.n - 1)
        if contraction_obstruction(h, e) is not None:
            # the new edge lies on another 3-cycle; contraction is undefined
            skipped += 1
            continue
        done += 1
        bad += canonical_code(contract_edge(h, e)) != canonical_code(g)
    ok = bad == 0 and freedom_bad == 0
    record(9, ok, f"{done} round trips, {bad} mismatches; {freedom_bad} freedom changes over "
                  f"{done + skipped} splits ({skipped} new edges not contractible)")
    assert ok


def all_graphs(nmax):
    """Every graph with at most nmax vertices up to isomorphism, by adding a
    vertex joined to every subset and rejecting on nauty certificates."""
    pynauty = pytest.importorskip("pynauty")

    def cert(n, adj):
        return pynauty.certificate(pynauty.Graph(n, adjacency_dict={v: list(adj[v]) for v in range(n)}))

    out = {1: [[]]}
    cur = [[]]
    for n in range(2, nmax + 1):
        seen, nxt = set(), []
        for edges in cur:
            adj = [set() for _ in range(n)]
            for u, w in edges:
                adj[u].add(w)
                adj[w].add(u)
            for mask in range(1 << (n - 1)):
                nb = [v for v in range(n - 1) if mask >> v & 1]
                adj[n - 1] = set(nb)
                for v in nb:
                    adj[v].add(n - 1)
                c = cert(n, adj)
                if c not in seen:
                    seen.add(c)
                    nxt.append(edges + [(v, n - 1) for v in nb])
                for v in nb:
                    adj[v].discard(n - 1)
        cur = nxt
        out[n] = cur
    return out


def test_criterion_10_sparsity_oracle():
    graphs = all_graphs(9)
    counts = [len(graphs[n]) for n in range(1, 10)]
    assert counts == [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
    checks = bad = 0
    for n in range(1, 10):
        for edges in graphs[n]:
            for alpha in (3, 6):
                checks += 1
                bad += is_sparse((n, edges), alpha) != brute_force_sparse((n, edges), alpha)
    rng = random.Random(10)
    rbad = 0
    for _ in range(1000):
        n = rng.randint(1, 12)
        p = rng.random()
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        for alpha in (3, 6):
            rbad += is_sparse((n, edges), alpha) != brute_force_sparse((n, edges), alpha)
    ok = bad == 0 and rbad == 0
    record(10, ok, f"{checks} checks on all graphs with v <= 9: {bad} disagreements; "
                   f"2000 checks on 1000 random graphs with v <= 12: {rbad}")
    assert ok


def test_criterion_11_rigidity(projective_census, single_hole_census):
    k3 = generic_rank_probe(maps.k3_sphere())
    octa = generic_rank_probe(maps.octahedron())
    db = generic_rank_probe(double_banana())
    graphs = projective_census.ordered() + single_hole_census.ordered()
    a = probe_census(graphs)
    b = probe_census(graphs)
    ok = (k3.minimally_rigid and octa.minimally_rigid and (db.rank, db.bound) == (17, 18)
          and a["all_minimally_rigid"] and a == b and len(graphs) == 10)
    record(11, ok, f"K3 {k3.rank}/{k3.bound}, octahedron {octa.rank}/{octa.bound}, double banana "
                   f"{db.rank}/{db.bound}; {len(graphs) - len(a['short'])}/{len(graphs)} census "
                   f"graphs minimally rigid; repeat identical: {a == b}")
    assert ok
