import pytest

from helpers import ACCEPTANCE_LINES

from searchorder.graph import Graph
from searchorder.order import PartialOrder


def graph(spec: str) -> Graph:
    """Edges as ``u-v`` tokens, or two-letter tokens for single-letter names."""
    return Graph.from_string(spec)


def po(g: Graph, *pairs: str) -> PartialOrder:
    """Closure of ``"x y"`` name pairs on ``g``."""
    return PartialOrder.from_pairs(g.n, [g.vids(p) for p in pairs])


def names(g: Graph, sigma) -> str:
    return " ".join(g.name_of(sigma))


@pytest.fixture
def split7():
    return graph("ab ac bc ad cd be ce af bg")


@pytest.fixture
def split7_order(split7):
    return po(split7, "f e", "g d")


@pytest.fixture
def p3():
    return graph("ab bc")


@pytest.fixture
def c4():
    return graph("v1-v2 v2-v3 v3-v4 v4-v1")


@pytest.fixture
def ladder():
    return graph("r-u1 r-u2 u1-w1 u1-w2 u2-w2")


@pytest.fixture
def star():
    return graph("s-x s-y s-z")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
