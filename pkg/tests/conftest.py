import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion and assert on it."""

    def record(name: str, ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
