import pytest

from orbitclosure.exactfield import QQ, PrimeField
from orbitclosure.paperdata import PaperData

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture(scope="session")
def data():
    return PaperData.default()


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture
def Q():
    return QQ


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
