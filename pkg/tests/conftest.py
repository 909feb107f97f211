from functools import lru_cache

import pytest

from augcube import augmented_cube, full_aut, hypercube, vertex_stabilizer


@lru_cache(maxsize=None)
def aq(n):
    return augmented_cube(n)


@lru_cache(maxsize=None)
def stab_of(n, family="augmented"):
    g = aq(n) if family == "augmented" else hypercube(n)
    return vertex_stabilizer(g)


@lru_cache(maxsize=None)
def aut_group_of(n, family="augmented"):
    s = stab_of(n, family)
    return full_aut(s.graph, stab=s).group()


@pytest.fixture(scope="session")
def aq4_aut():
    return aut_group_of(4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, line
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(line(k))
