import contextlib
import time

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    @contextlib.contextmanager
    def run(number, title, limit_s=None):
        t0 = time.perf_counter()
        status, note = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            if limit_s is not None and elapsed >= limit_s:
                note = f" (over {limit_s}s limit)"
                raise AssertionError(f"criterion {number} took {elapsed:.2f}s >= {limit_s}s")
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - t0
            ACCEPTANCE_LINES.append((number, f"[{status}] {number:>2}. {title}  {elapsed:.2f}s{note}"))
    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
