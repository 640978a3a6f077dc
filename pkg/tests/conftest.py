import pytest
from hypothesis import settings, strategies as st

from nisat.formula import Formula

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

PAPER_INTERLACED = Formula.of([[1], [2], [-1], [-2]])
PAPER_PERMUTED = Formula.of([[1], [2], [-2], [-1]])
PAPER_ENCODING = Formula.of([[1, 2, -3], [-1, -2]])


def literals(max_var=6):
    return st.integers(1, max_var).flatmap(lambda v: st.sampled_from((v, -v)))


def formulas(max_k=6, max_width=3, max_var=5, min_k=0):
    clause = st.lists(literals(max_var), min_size=1, max_size=max_width)
    return st.lists(clause, min_size=min_k, max_size=max_k).map(Formula.of)


@pytest.fixture
def paper_interlaced():
    return PAPER_INTERLACED


@pytest.fixture
def paper_permuted():
    return PAPER_PERMUTED


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
