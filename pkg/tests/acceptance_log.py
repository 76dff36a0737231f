"""Collects one result line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

RESULTS = {}


@contextmanager
def criterion(number, title):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s)"
        print(RESULTS[number])
