import random
from itertools import combinations
from pathlib import Path

import pytest

from tokenham.graph_core import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
)

GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def small_corpus(max_n=8):
    """Named graphs of order 2..max_n used by the exhaustive property checks."""
    out = []
    for n in range(2, max_n + 1):
        out.append((f"fan{n}", make_fan(n)))
        out.append((f"path{n}", make_path(n)))
        out.append((f"complete{n}", make_complete(n)))
        if n >= 3:
            out.append((f"cycle{n}", make_cycle(n)))
        if n >= 4:
            out.append((f"wheel{n}", make_wheel(n)))
        for seed in range(2):
            out.append((f"random{n}_{seed}", random_graph(n, 0.5, seed)))
    for m, m2 in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 4)]:
        out.append((f"K{m},{m2}", make_complete_bipartite(m, m2)))
    return out


@pytest.fixture
def golden():
    return lambda name: (GOLDEN / name).read_text()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
