"""Shared fixtures: the bundled instances and a few small named graphs."""

import pytest

from src.graph_core import build_graph
from src.utils.corpus import cycle_graph, path_graph
from src.utils.graph_io import load_graph


@pytest.fixture(autouse=True)
def _default_guards(monkeypatch):
    for name in ("MCLOSED_CLOSURE_MAX_N", "MCLOSED_PRIMES_MAX_N", "MCLOSED_INDUCED_PATH_MAX_N",
                 "MCLOSED_ORACLE_MAX_N", "MCLOSED_ORACLE_STEP_GUARD", "MCLOSED_WORKERS",
                 "MCLOSED_SEED", "MCLOSED_LOG_LEVEL", "MCLOSED_DATA_DIR"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return build_graph(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def claw():
    """K_{1,3} with center 2 and leaves 1, 3, 4."""
    return build_graph(4, [(1, 2), (2, 3), (2, 4)])


@pytest.fixture
def remark_graph():
    """d(i, i+1) <= 2 for every i, yet the labeling is not 3-closed."""
    return build_graph(5, [(1, 2), (2, 4), (1, 3), (3, 4), (2, 5)])


@pytest.fixture
def spider7():
    """Smallest tree that is not a caterpillar: three legs of length two."""
    return build_graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])


@pytest.fixture
def fig1():
    return load_graph("fig1")


@pytest.fixture
def fig2():
    return load_graph("fig2")


@pytest.fixture
def fig3():
    return load_graph("fig3")


@pytest.fixture
def fig4():
    return load_graph("fig4")


@pytest.fixture
def ex25():
    return load_graph("ex25")


@pytest.fixture
def c5():
    return load_graph("c5")
