"""Shared test plumbing: collects acceptance-criterion verdict lines and
prints them in the terminal summary so they survive output capture."""

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def record_verdict():
    """Recorder for one [PASS]/[FAIL] line per acceptance criterion."""

    def record(line):
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.line(line)
