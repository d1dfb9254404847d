"""Shared fixtures and the acceptance summary printed at the end of a run."""

import pytest

from copnum.analysis import theorem_suite

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def suite_reports():
    """The full verification battery, run once sequentially."""
    return theorem_suite({"threads": 1})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
