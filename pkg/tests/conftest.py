import math

import pytest

from reliapath.model import Edge, Network

# filled in by test_acceptance; printed once at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def line_net(*reliabilities, prior=(1.0,)):
    """Chain s -> v1 -> ... -> t with one edge per reliability vector."""
    names = ["s"] + [f"v{i}" for i in range(1, len(reliabilities))] + ["t"]
    edges = [Edge(f"e{i}", names[i], names[i + 1], r) for i, r in enumerate(reliabilities)]
    return Network(len(prior), prior, names, "s", "t", edges)


def diamond(upper, lower, prior=(1.0,)):
    """Two two-edge routes s-a-t (upper, edges u1 u2) and s-b-t (lower, edges l1 l2)."""
    edges = [
        Edge("u1", "s", "a", upper[0]),
        Edge("u2", "a", "t", upper[1]),
        Edge("l1", "s", "b", lower[0]),
        Edge("l2", "b", "t", lower[1]),
    ]
    return Network(len(prior), prior, ["s", "a", "b", "t"], "s", "t", edges)


@pytest.fixture
def gap_diamond():
    # upper route is perfect in state 0 and dead in state 1; lower is 0.6 per edge in both
    return diamond(([1.0, 0.0], [1.0, 0.0]), ([0.6, 0.6], [0.6, 0.6]), prior=(0.5, 0.5))


@pytest.fixture
def grid_diamond():
    e = math.exp
    return diamond(([1.0, 0.0], [1.0, 0.0]), ([e(-1), e(-1)], [e(-1), e(-1)]), prior=(0.5, 0.5))
