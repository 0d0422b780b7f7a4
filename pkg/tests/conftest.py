import pytest
from hypothesis import strategies as st

from linktau.lmap import kirk_example
from linktau.rings import BiLaurent, C2Algebra, Laurent

small_int = st.integers(min_value=-6, max_value=6)

laurents = st.dictionaries(small_int, st.integers(-20, 20), max_size=6).map(Laurent)
bilaurents = st.dictionaries(st.tuples(small_int, small_int), st.integers(-20, 20), max_size=6).map(BiLaurent)
c2s = st.builds(C2Algebra, st.integers(0, 1), st.integers(0, 1))


@pytest.fixture(scope="session")
def kirk():
    return kirk_example()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""

    def report(number: int, name: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
