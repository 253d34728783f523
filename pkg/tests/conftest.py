import pytest

from ilsconn import CoeffMatrix

EQ1 = [[1, 1, 0], [1, -1, 0], [-1, 0, 1], [-1, 0, -1]]

# filled by test_acceptance, reported at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def eq1():
    return CoeffMatrix.from_rows(EQ1)


@pytest.fixture
def swap2():
    return CoeffMatrix.from_rows([[1, -1], [-1, 1]])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")
