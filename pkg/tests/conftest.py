import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from partialshift.boolean_algebra import BooleanAlgebra  # noqa: E402
from partialshift.partial_action import PartialAction  # noqa: E402
from partialshift.shift_space import FIBONACCI, GOLDEN_MEAN, UPPER_TRIANGULAR, ShiftPresentation, Side  # noqa: E402


@pytest.fixture(scope="session")
def gm():
    return PartialAction(ShiftPresentation.matrix("ab", GOLDEN_MEAN))


@pytest.fixture(scope="session")
def ut():
    return PartialAction(ShiftPresentation.matrix("ab", UPPER_TRIANGULAR))


@pytest.fixture(scope="session")
def full():
    return PartialAction(ShiftPresentation.full("ab"))


@pytest.fixture(scope="session")
def full2():
    return PartialAction(ShiftPresentation.full("ab", side=Side.TWO))


@pytest.fixture(scope="session")
def fib():
    return PartialAction(ShiftPresentation.substitution("ab", FIBONACCI))


@pytest.fixture(scope="session")
def fib2():
    return PartialAction(ShiftPresentation.substitution("ab", FIBONACCI, side=Side.TWO))


@pytest.fixture(scope="session")
def gm_alg(gm):
    return BooleanAlgebra(gm)


@pytest.fixture(scope="session")
def fib_alg(fib):
    return BooleanAlgebra(fib)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: criterion(n, title, ok, detail)."""
    log = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(n, title, ok, detail=""):
        line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        log.append((n, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(ACCEPTANCE, [])
    if log:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(log):
            terminalreporter.write_line(line)
