from __future__ import annotations

from pathlib import Path

import pytest

from semigraph_spectra import parse_semigraph

DATA = Path(__file__).parent / "data"

# (criterion number, title, passed, detail) lines filled by test_acceptance
ACCEPTANCE_LINES: list[tuple[int, str, bool, str]] = []


@pytest.fixture(scope="session")
def seven_vertex():
    return parse_semigraph((DATA / "seven_vertex.sg").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE_LINES):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:>2}. {title}: {detail}")
