import random

import pytest

from surfcensus import maps
from surfcensus.surgery import split_choices, split_vertex

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


BASES = {
    "S2": maps.k3_sphere,
    "P2": maps.k3_projective,
    "T2": maps.k7_torus,
    "P2tri": maps.k6_projective,
    "oct": maps.octahedron,
}


def random_splits(g, k: int, rng: random.Random):
    for _ in range(k):
        g = split_vertex(g, *rng.choice(split_choices(g)))
    return g


@pytest.fixture
def rng():
    return random.Random(1234)
