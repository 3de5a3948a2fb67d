import pytest
from hypothesis import strategies as st

from orbitcount import natural_action, perm
from orbitcount.corpus import cyclic_group, symmetric_group, trivial_group


@st.composite
def permutations(draw, min_degree=1, max_degree=6, degree=None):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    return perm(draw(st.permutations(range(n))))


@st.composite
def generator_sets(draw, max_degree=6, max_gens=3):
    n = draw(st.integers(1, max_degree))
    k = draw(st.integers(0, max_gens))
    return n, [draw(permutations(degree=n)) for _ in range(k)]


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def s3_natural(s3):
    return natural_action(s3)


@pytest.fixture
def swap3():
    """<(0 1)> acting on three points."""
    from orbitcount import generate_group, parse_cycles

    return natural_action(generate_group([parse_cycles("(0 1)", 3)]))


@pytest.fixture
def c4():
    return cyclic_group(4)


@pytest.fixture
def trivial5():
    return natural_action(trivial_group(5))


ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
