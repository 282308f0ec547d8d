import pytest

from posetalg import IncidenceAlgebra
from posetalg.checks import corpus_exhaustive4, corpus_random7

import _acceptance_log


def pytest_terminal_summary(terminalreporter):
    if _acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_log.LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def exhaustive4():
    return corpus_exhaustive4()


@pytest.fixture(scope="session")
def random7():
    return corpus_random7()


@pytest.fixture(scope="session")
def corpus(exhaustive4, random7):
    return exhaustive4 + random7


@pytest.fixture(scope="session")
def corpus_algebras(corpus):
    # built once; the acceptance criteria all walk the same corpus
    return [IncidenceAlgebra(P, "reflexive") for P in corpus]


@pytest.fixture(scope="session")
def corpus_tables(corpus_algebras):
    return [A.multiplication_table() for A in corpus_algebras]
