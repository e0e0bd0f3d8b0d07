"""Exhaustive sweeps over all ``n**n`` index tuples.

Tuples are produced in lexicographic order by an odometer, so the sweep can be
cut into contiguous rank ranges and those ranges run on separate workers.
Reports from ranges merge by adding counts and concatenating lists in range
order, which makes the merged report independent of the worker count.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from levicivita.backends.registry import ORACLE, Backend
from levicivita.core import _oracle
from levicivita.errors import EnumerationError


@dataclass
class EnumerationReport:
    n: int
    backend: str
    count_plus: int = 0
    count_minus: int = 0
    count_zero: int = 0
    disagreements: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    nonzero: list[tuple[tuple[int, ...], int]] | None = None

    @property
    def total(self) -> int:
        return self.count_plus + self.count_minus + self.count_zero

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def merge(self, other: EnumerationReport) -> EnumerationReport:
        self.count_plus += other.count_plus
        self.count_minus += other.count_minus
        self.count_zero += other.count_zero
        self.disagreements.extend(other.disagreements)
        if self.nonzero is not None and other.nonzero is not None:
            self.nonzero.extend(other.nonzero)
        return self

    def counts(self) -> dict:
        return {
            "n": self.n,
            "backend": self.backend,
            "plus": self.count_plus,
            "minus": self.count_minus,
            "zero": self.count_zero,
            "disagreements": len(self.disagreements),
        }


def rank_to_tuple(n: int, rank: int) -> tuple[int, ...]:
    """The tuple at lexicographic position ``rank`` (0-based)."""
    digits = []
    for _ in range(n):
        rank, d = divmod(rank, n)
        digits.append(d + 1)
    return tuple(reversed(digits))


def iter_tuples(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """Odometer over tuples with lexicographic rank in ``[start, stop)``."""
    total = n**n
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    digits = list(rank_to_tuple(n, start))
    for _ in range(stop - start):
        yield tuple(digits)
        pos = n - 1
        while pos >= 0:
            if digits[pos] < n:
                digits[pos] += 1
                break
            digits[pos] = 1
            pos -= 1


def _sweep(n, backend, start, stop, list_nonzero, verify) -> EnumerationReport:
    evaluate = backend.evaluator(n)
    report = EnumerationReport(n, backend.name, nonzero=[] if list_nonzero else None)
    plus = minus = zero = 0
    for t in iter_tuples(n, start, stop):
        try:
            s = evaluate(t)
        except Exception as exc:
            raise EnumerationError(f"{backend.name} failed at {t}: {exc}", t) from exc
        if s == 1:
            plus += 1
        elif s == -1:
            minus += 1
        elif s == 0:
            zero += 1
        else:
            raise EnumerationError(f"{backend.name} returned {s!r} at {t}", t)
        if s and list_nonzero:
            report.nonzero.append((t, s))
        if verify:
            expected = _oracle(t)
            if s != expected:
                report.disagreements.append((t, s, expected))
    report.count_plus, report.count_minus, report.count_zero = plus, minus, zero
    return report


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = math.ceil(total / parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def default_jobs() -> int:
    """Worker count from ``LEVICIVITA_JOBS``, defaulting to 1."""
    try:
        return max(1, int(os.environ.get("LEVICIVITA_JOBS", "1")))
    except ValueError:
        return 1


def _run(n, backend, list_nonzero, verify, jobs, chunks) -> EnumerationReport:
    backend.check(n)
    jobs = default_jobs() if jobs is None else jobs
    ranges = _ranges(n**n, chunks or jobs)
    if jobs <= 1 or len(ranges) == 1:
        parts = [_sweep(n, backend, a, b, list_nonzero, verify) for a, b in ranges]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_sweep, n, backend, a, b, list_nonzero, verify) for a, b in ranges
            ]
            parts = [f.result() for f in futures]
    report = parts[0]
    for p in parts[1:]:
        report.merge(p)
    return report


def enumerate_all(
    n: int,
    backend: Backend,
    list_nonzero: bool = False,
    jobs: int | None = 1,
    chunks: int | None = None,
) -> EnumerationReport:
    """Evaluate every tuple of dimension ``n`` and count the outcomes.

    With ``list_nonzero`` the report carries ``(tuple, sign)`` for every
    nonzero result, in lexicographic order. ``chunks`` splits the sweep into
    that many rank ranges (defaults to ``jobs``); ``jobs=None`` reads
    ``LEVICIVITA_JOBS``.
    """
    return _run(n, backend, list_nonzero, False, jobs, chunks)


def verify_backend(
    n: int, backend: Backend, jobs: int | None = 1, chunks: int | None = None
) -> EnumerationReport:
    """Sweep ``backend`` and record every tuple where it differs from the oracle.

    Disagreements are data; only an invalid backend/dimension pairing raises,
    and it does so before any tuple is evaluated.
    """
    return _run(n, backend, False, True, jobs, chunks)


def iter_nonzero(n: int, backend: Backend = ORACLE) -> Iterator[tuple[tuple[int, ...], int]]:
    """Stream ``(tuple, sign)`` for nonzero tuples in lexicographic order."""
    evaluate = backend.evaluator(n)
    for t in iter_tuples(n):
        s = evaluate(t)
        if s:
            yield t, s


def iter_signs(n: int, backend: Backend = ORACLE) -> Iterator[tuple[tuple[int, ...], int]]:
    """Stream ``(tuple, sign)`` for every tuple in lexicographic order."""
    evaluate = backend.evaluator(n)
    for t in iter_tuples(n):
        yield t, evaluate(t)
