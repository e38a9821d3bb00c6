from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=10, deadline=None)
settings.load_profile("default")


# one pass/fail line per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
