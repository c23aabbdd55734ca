import contextlib
import time

import pytest


@pytest.fixture
def no_cache(monkeypatch):
    monkeypatch.delenv("QKZSTRIP_CACHE_DIR", raising=False)


def cold_caches():
    """Forget every memoized table so timings include the full computation."""
    from qkzstrip import basischange, psivec, qkzoracle
    from qkzstrip.ctengine import integrals

    for fn in (integrals._table, basischange._build_matrix, basischange.inverse_matrix, psivec._psi,
               qkzoracle._solve):
        fn.cache_clear()


@pytest.fixture
def criterion(request):
    """``with criterion(k, title, limit) as notes:`` records one pass/fail line."""
    log = request.config.__dict__.setdefault("_acceptance", {})

    @contextlib.contextmanager
    def run(k, title, limit):
        notes: list[str] = []
        cold_caches()
        t0 = time.perf_counter()
        try:
            yield notes
            dt = time.perf_counter() - t0
            if dt > limit:
                raise AssertionError(f"runtime {dt:.1f}s exceeds {limit}s")
        except BaseException as exc:
            dt = time.perf_counter() - t0
            log[k] = f"[FAIL] criterion {k:2d}: {title} ({dt:.2f}s / {limit}s) {exc!s:.200}"
            raise
        else:
            extra = f" | {'; '.join(notes)}" if notes else ""
            log[k] = f"[PASS] criterion {k:2d}: {title} ({dt:.2f}s / {limit}s){extra}"
        finally:
            print(log[k])

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.__dict__.get("_acceptance")
    if log:
        terminalreporter.section("acceptance criteria")
        for k in sorted(log):
            terminalreporter.write_line(log[k])
