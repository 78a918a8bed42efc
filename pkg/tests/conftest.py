from __future__ import annotations

from pathlib import Path

import pytest

from relcoh import Ring, parse_session

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Filled by test_acceptance.py, printed once at the end of the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def load(name: str):
    return parse_session((FIXTURES / name).read_text())


@pytest.fixture
def xz():
    return Ring(["x", "z"])


@pytest.fixture
def xyz():
    return Ring(["x", "y", "z"])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
