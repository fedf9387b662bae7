import sys
from pathlib import Path

import pytest

from matroidhall.matroid import direct_sum, uniform, zero_matroid

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def a():
    return uniform(1, 1)


@pytest.fixture
def b():
    return uniform(0, 1)


@pytest.fixture
def zero():
    return zero_matroid()


@pytest.fixture
def u12():
    return uniform(1, 2)


@pytest.fixture
def u23():
    return uniform(2, 3)


@pytest.fixture
def ab(a, b):
    return direct_sum(a, b)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line; it is printed now and again in the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number, name, ok, detail=""):
        line = f"criterion {number} {'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else "")
        print(line)
        lines.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
