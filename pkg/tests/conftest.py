import itertools
from pathlib import Path

import pytest

from isgames.enumeration import enumerate_connected
from isgames.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


P3, P4, P5 = path(3), path(4), path(5)
C4 = cycle(4)
K2, K3 = complete(2), complete(3)
K14 = star(4)
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture(scope="session")
def corpus():
    """Connected graphs on 2..6 vertices, one per isomorphism class."""
    return [g for n in range(2, 7) for g in enumerate_connected(n)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
