"""Shared test helpers: small-case enumeration, random generation, and the
acceptance report printed after the run."""
from __future__ import annotations

import random

from multiseg import Multisegment, Segment

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_acceptance(number: int, title: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((number, title, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {number:2d}: {status} - {title}{suffix}")


def all_multisegments(max_degree: int, lo: int = 0, hi: int = 5, anchored: bool = True):
    """Every multisegment of degree <= max_degree with support in [lo, hi];
    with ``anchored`` only translation representatives (min begin == lo).
    """
    segs = [
        Segment(i, j)
        for i in range(lo, hi + 1)
        for j in range(i, hi + 1)
        if j - i + 1 <= max_degree
    ]
    out: list[Multisegment] = []

    def rec(start: int, remaining: int, acc: list[Segment]) -> None:
        for idx in range(start, len(segs)):
            s = segs[idx]
            if s.length > remaining:
                continue
            acc.append(s)
            out.append(Multisegment(list(acc)))
            rec(idx, remaining - s.length, acc)
            acc.pop()

    rec(0, max_degree, [])
    if anchored:
        out = [m for m in out if min(m.begins()) == lo]
    return out


def random_multisegment(
    rng: random.Random, max_degree: int, lo: int = 0, hi: int = 4, max_len: int = 4
) -> Multisegment:
    """Random nonempty multisegment of degree <= max_degree."""
    target = rng.randint(1, max_degree)
    segs: list[Segment] = []
    deg = 0
    while deg < target:
        b = rng.randint(lo, hi)
        e = b + rng.randint(0, max_len - 1)
        if deg + (e - b + 1) > target:
            e = b + (target - deg) - 1
        segs.append(Segment(b, e))
        deg += e - b + 1
    return Multisegment(segs)
