"""Throughput of full ``n**n`` sweeps per backend.

Each (backend, n) pair is spot-checked against the oracle on 100 seeded random
tuples before anything is timed; timings are reported, never asserted.
"""

from __future__ import annotations

import csv
import io
import json
import random
import statistics
import time
from collections.abc import Iterable
from dataclasses import asdict, dataclass

from levicivita.backends.registry import Backend
from levicivita.core import _oracle
from levicivita.enumeration import enumerate_all, iter_tuples
from levicivita.errors import BenchError

CSV_FIELDS = ("backend", "n", "tuples", "median_ns_per_eval", "total_ms")
SPOT_CHECKS = 100


@dataclass(frozen=True)
class BenchConfig:
    n_min: int
    n_max: int
    backends: tuple[Backend, ...]
    repetitions: int = 3
    warmup_sweeps: int = 1
    jobs: int = 1
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "backends", tuple(self.backends))
        if self.n_min < 2 or self.n_max < self.n_min:
            raise BenchError(f"invalid dimension range {self.n_min}..{self.n_max}")
        if self.repetitions < 1:
            raise BenchError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.warmup_sweeps < 0:
            raise BenchError(f"warmup_sweeps must be >= 0, got {self.warmup_sweeps}")
        if not self.backends:
            raise BenchError("no backends to benchmark")
        for b in self.backends:
            for n in self.n_range:
                if not b.supports(n):
                    raise BenchError(f"backend {b.name} does not support n={n}")

    @property
    def n_range(self) -> range:
        return range(self.n_min, self.n_max + 1)


@dataclass(frozen=True)
class BenchRecord:
    backend: str
    n: int
    tuples: int
    median_ns_per_eval: float
    total_ms: float

    @property
    def tuples_evaluated(self) -> int:
        return self.tuples


def spot_check(backend: Backend, n: int, seed: int = 0, count: int = SPOT_CHECKS) -> None:
    """Compare ``backend`` with the oracle on ``count`` seeded random tuples.

    Half the draws are permutations so the nonzero branch is exercised.
    """
    evaluate = backend.evaluator(n)
    rng = random.Random(f"spot-{seed}-{n}-{backend.name}")
    for k in range(count):
        if k % 2:
            t = tuple(rng.sample(range(1, n + 1), n))
        else:
            t = tuple(rng.randint(1, n) for _ in range(n))
        got, want = evaluate(t), _oracle(t)
        if got != want:
            raise BenchError(f"{backend.name} spot-check failed at {t}: got {got}, expected {want}")


def _serial_sweep(evaluate, n):
    for t in iter_tuples(n):
        evaluate(t)


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    records = []
    for b in cfg.backends:
        for n in cfg.n_range:
            spot_check(b, n, cfg.seed)
            size = n**n
            if cfg.jobs > 1:
                def sweep():
                    enumerate_all(n, b, jobs=cfg.jobs)
                label = f"{b.name}[jobs={cfg.jobs}]"
            else:
                evaluate = b.evaluator(n)
                def sweep():
                    _serial_sweep(evaluate, n)
                label = b.name
            for _ in range(cfg.warmup_sweeps):
                sweep()
            times = []
            for _ in range(cfg.repetitions):
                t0 = time.perf_counter_ns()
                sweep()
                times.append(time.perf_counter_ns() - t0)
            records.append(BenchRecord(
                backend=label,
                n=n,
                tuples=size * cfg.repetitions,
                median_ns_per_eval=statistics.median(times) / size,
                total_ms=sum(times) / 1e6,
            ))
    return records


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow([r.backend, r.n, r.tuples, f"{r.median_ns_per_eval:.3f}", f"{r.total_ms:.3f}"])
    return buf.getvalue()


def to_jsonl(records: Iterable[BenchRecord]) -> str:
    return "".join(json.dumps(asdict(r)) + "\n" for r in records)


def parse_records(text: str, fmt: str) -> list[BenchRecord]:
    """Read back the output of :func:`to_csv` or :func:`to_jsonl`."""
    if fmt == "csv":
        rows = csv.DictReader(io.StringIO(text))
        if tuple(rows.fieldnames or ()) != CSV_FIELDS:
            raise ValueError(f"unexpected CSV header {rows.fieldnames}")
        return [BenchRecord(r["backend"], int(r["n"]), int(r["tuples"]),
                            float(r["median_ns_per_eval"]), float(r["total_ms"])) for r in rows]
    out = []
    for line in text.splitlines():
        if line.strip():
            d = json.loads(line)
            if tuple(d) != CSV_FIELDS:
                raise ValueError(f"unexpected JSON fields {list(d)}")
            out.append(BenchRecord(**d))
    return out

