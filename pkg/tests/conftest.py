import sys
from pathlib import Path

import pytest

from ffnorm import FunctionField, Poly
from ffnorm.cli import load_field_spec

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(Path(__file__).resolve().parent))


def P(coeffs, q):
    return Poly(list(coeffs), q)


def hyperelliptic(q, h):
    """y^2 = h(x), h given constant term first."""
    return FunctionField(q, [P([-a for a in h], q), P([0], q), P([1], q)])


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def E1():
    # y^2 = x^3 + x + 1 over F_3
    return hyperelliptic(3, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def E2():
    return load_field_spec(ROOT / "fields" / "e2.toml")


@pytest.fixture(scope="session")
def G2():
    # genus 2: y^2 = x^5 + 2x + 1 over F_3
    return hyperelliptic(3, [1, 2, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def G0split():
    # genus 0, y^2 = x^2 + 1 over F_3: two rational places at infinity
    return hyperelliptic(3, [1, 0, 1])


@pytest.fixture(scope="session")
def R7():
    # genus 1, two infinite places, regulator 7
    return load_field_spec(ROOT / "benchmarks" / "fields" / "g1_n2.toml")


# -- per-criterion report -------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    prev = _CRITERIA.get(num, (title, "PASS"))
    if rep.failed or (rep.when == "call" and rep.skipped):
        state = "FAIL" if rep.failed else "SKIP"
        _CRITERIA[num] = (title, state if prev[1] == "PASS" else prev[1])
    elif num not in _CRITERIA:
        _CRITERIA[num] = prev


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, state = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {state}  {title}")
