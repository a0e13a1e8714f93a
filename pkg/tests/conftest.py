from fractions import Fraction as F

import pytest

from tropcurve.gallery import gen_tropical_line, saturated_corpus, unsaturated_corpus


@pytest.fixture
def line2():
    return gen_tropical_line(2, (F(1, 3), F(1, 3)))


@pytest.fixture
def line3():
    return gen_tropical_line(3, (F(1, 4),) * 3)


@pytest.fixture(scope="session")
def sat_corpus():
    return saturated_corpus(200)


@pytest.fixture(scope="session")
def unsat_corpus():
    return unsaturated_corpus(100)


_ACCEPTANCE = []


@pytest.fixture
def report():
    """Record an ``ACCEPTANCE k PASS|FAIL`` line, then assert the verdict."""

    def emit(k, ok, detail=""):
        line = f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return emit


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
