from __future__ import annotations

import pytest

from looptorsion import numtheory

#: Filled by tests/test_acceptance.py; printed after the run so the
#: acceptance suite always shows one line per criterion.
ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in ACCEPTANCE_RESULTS:
        line = f"{status:4} {name}"
        if detail:
            line += f" - {detail}"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def census_100k():
    return numtheory.census(100_000, mode="theorem1")
