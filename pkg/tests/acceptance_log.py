"""Collects one result line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    """Record PASS/FAIL for the enclosed block; ``note`` holds extra detail."""
    note: dict = {}
    start = time.perf_counter()
    ok = False
    try:
        yield note
        ok = True
    finally:
        took = time.perf_counter() - start
        extra = "  ".join(f"{k}={v}" for k, v in note.items())
        LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2} {title} "
                     f"({took:.2f}s) {extra}".rstrip())
        print(LINES[-1])
