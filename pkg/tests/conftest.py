import pytest

import oracles
from oracles import ACCEPTANCE_RESULTS


@pytest.fixture(scope="session")
def brute_levels():
    return oracles.brute_levels()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE_RESULTS[name] else 'FAIL'}  {name}")
