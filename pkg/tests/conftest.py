import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from loopsmith import (STS7, STS9, all_loops, cyclic_group, direct_product, make_loop,  # noqa: E402
                       steiner_loop, symmetric_group)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def small_loops():
    """Every normalized loop of order 1..5 (63 loops)."""
    return [L for n in range(1, 6) for L in all_loops(n)]


@pytest.fixture(scope="session")
def loops6():
    return list(all_loops(6))


@pytest.fixture(scope="session")
def loops_le6(small_loops, loops6):
    return small_loops + loops6


@pytest.fixture
def z4():
    return make_loop([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]])


@pytest.fixture
def klein():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def steiner8():
    return steiner_loop(STS7)


@pytest.fixture(scope="session")
def steiner10():
    return steiner_loop(STS9)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((mark.args[0], mark.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {title}")
