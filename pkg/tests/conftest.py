import numpy as np
import pytest

from clusterwalk import generate
from clusterwalk.graph_core import random_connected

NAMED = [
    ("complete", 2), ("complete", 3), ("complete", 4), ("complete", 6),
    ("complete_bipartite", 2, 2), ("complete_bipartite", 3, 3), ("complete_bipartite", 2, 5),
    ("path", 3), ("path", 4), ("path", 5), ("cycle", 4), ("cycle", 5), ("cycle", 6),
    ("star", 3), ("barbell", 4, 3, 4), ("barbell", 3, 1, 5),
    ("conjoined_polygons", 2, 4), ("conjoined_polygons", 3, 5), ("friendship", 3),
    ("hypercube", 3), ("petersen",),
]


def named_graphs():
    return [generate(*spec) for spec in NAMED]


def random_corpus(count=50, seed=20240611, nmax=12):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(3, nmax + 1))
        p = float(rng.uniform(0.15, 0.8))
        out.append(random_connected(n, p, rng))
    return out


def corpus():
    return named_graphs() + random_corpus()


@pytest.fixture(params=NAMED, ids=lambda s: "-".join(map(str, s)))
def named(request):
    return generate(*request.param)


def adj(g):
    return [list(a) for a in g.adjacency]


_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(n, ok, detail)``; returns ``ok``."""
    def record(n, ok, detail):
        _ACCEPTANCE[n] = (bool(ok), detail)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
