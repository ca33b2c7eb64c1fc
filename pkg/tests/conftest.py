import time
from contextlib import contextmanager

import pytest

from proofkit.corpus import golden_nd

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def golden():
    return golden_nd()


class _Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.detail = ""
        self.elapsed = 0.0

    @property
    def over_time(self) -> bool:
        return self.limit is not None and self.elapsed > self.limit

    def line(self, ok: bool, note: str = "") -> str:
        status = "PASS" if ok else "FAIL"
        bound = f", bound {self.limit:g} s" if self.limit is not None else ""
        parts = [f"{self.elapsed:.2f} s{bound}"] + [x for x in (self.detail, note) if x]
        return f"criterion {self.number} [{self.title}]: {status} ({'; '.join(parts)})"


@pytest.fixture
def criterion():
    """Time a criterion, record one pass/fail line, and fail on a runtime overrun."""

    @contextmanager
    def run(number, title, limit=None, runtime_xfail=None):
        c = _Criterion(number, title, limit)
        start = time.perf_counter()
        try:
            yield c
        except Exception as exc:
            c.elapsed = time.perf_counter() - start
            _emit(c.line(False, f"{type(exc).__name__}: {exc}".splitlines()[0][:200]))
            raise
        c.elapsed = time.perf_counter() - start
        if c.over_time:
            _emit(c.line(False, "runtime bound exceeded"))
            if runtime_xfail:
                pytest.xfail(runtime_xfail)
            pytest.fail(f"criterion {number} took {c.elapsed:.1f} s, bound {limit} s")
        _emit(c.line(True))

    return run


def _emit(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
