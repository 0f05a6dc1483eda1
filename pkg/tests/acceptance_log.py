"""Shared record of acceptance outcomes, printed once per criterion."""

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the block; record PASS only if it finishes without error inside ``limit`` seconds."""
    start = time.perf_counter()
    status = "FAIL"
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit:
            note = f" over the {limit:g}s limit"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s")
        status = "PASS"
    except BaseException as exc:
        if not note:
            note = f" {type(exc).__name__}: {exc}".split("\n")[0]
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:2d}: {status} ({elapsed:7.2f}s) {title}{'' if status == 'PASS' else ' --' + note}"
        RESULTS[number] = line
        print(line)
