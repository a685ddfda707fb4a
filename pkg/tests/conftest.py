import pytest

from rlse import EventFamily, StateSpace
from rlse import catalog as C

_acceptance = {}


@pytest.fixture
def mo2():
    return C.mo_lattice(2)


@pytest.fixture
def r_mo2():
    return C.specific_rlse_mo(2)


@pytest.fixture
def concrete_mo2():
    return C.concrete_mo2_events()


@pytest.fixture
def boolean4():
    return C.boolean_events()


@pytest.fixture
def graded_mo2():
    """MO_2 realised by non-two-valued events over two states."""
    return EventFamily(
        StateSpace(["s1", "s2"]),
        [(0, 0), ("1/5", "4/5"), ("4/5", "1/5"), ("2/5", "3/5"), ("3/5", "2/5"), (1, 1)],
        ["0", "a", "a'", "b", "b'", "1"],
        name="graded-MO2",
    )


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "error"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome = _acceptance[name]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
