import pytest

from continuant_eq import EquationInstance, IntPolynomial

QUARTIC = IntPolynomial((1, 0, 0, 0, 1))


@pytest.fixture
def quartic():
    return QUARTIC


@pytest.fixture
def inst2():
    return EquationInstance(QUARTIC, 1, 2)


@pytest.fixture
def inst4():
    return EquationInstance(QUARTIC, 1, 4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
