"""Products of two epsilons in two and three dimensions, and determinants by
epsilon expansion."""

from __future__ import annotations

import itertools
import random
from collections.abc import Sequence
from dataclasses import dataclass

from levicivita.backends.exact import _exact_div, bareiss_determinant
from levicivita.backends.registry import (
    CLOSED_FORM_LOW_DIM,
    ORACLE,
    RATIONAL_PRODUCT,
    Backend,
)
from levicivita.core import epsilon_oracle
from levicivita.specfun import kron_delta


def _domain(values, n):
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"indices must be integers in 1..{n}, got {tuple(values)}")


def eps2_product_delta(i: int, j: int, m: int, n: int) -> int:
    """``eps_ij eps_mn`` as ``d_im d_jn - d_in d_jm``."""
    _domain((i, j, m, n), 2)
    d = kron_delta
    return d(i - m) * d(j - n) - d(i - n) * d(j - m)


def eps2_product_closed(i: int, j: int, m: int, n: int) -> int:
    """``eps_ij eps_mn`` as ``(j - i)(n - m)``."""
    _domain((i, j, m, n), 2)
    return (j - i) * (n - m)


def eps3_product_delta(i: int, j: int, k: int, l: int, m: int, n: int) -> int:
    """``eps_ijk eps_lmn`` as the cofactor expansion of the 3x3 delta determinant."""
    _domain((i, j, k, l, m, n), 3)

    def d(a, b):
        return kron_delta(a - b)

    return (
        d(i, l) * (d(j, m) * d(k, n) - d(j, n) * d(k, m))
        - d(i, m) * (d(j, l) * d(k, n) - d(j, n) * d(k, l))
        + d(i, n) * (d(j, l) * d(k, m) - d(j, m) * d(k, l))
    )


def eps3_product_closed(i: int, j: int, k: int, l: int, m: int, n: int) -> int:
    """``eps_ijk eps_lmn`` as ``(j-i)(k-i)(k-j)(m-l)(n-l)(n-m) / 4``."""
    _domain((i, j, k, l, m, n), 3)
    num = (j - i) * (k - i) * (k - j) * (m - l) * (n - l) * (n - m)
    return _exact_div(num, 4, "3-d epsilon product")


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must be exactly {self.n}x{self.n}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SquareMatrix:
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        return cls(len(rows), rows)


def det_via_epsilon(
    x: SquareMatrix | Sequence[Sequence[int]],
    backend: Backend = ORACLE,
    permutations_only: bool = False,
) -> int:
    """Determinant as the sum over tuples of ``eps(t) * prod_r x[r, t_r]``.

    All ``n**n`` tuples are visited unless ``permutations_only`` is set, in
    which case only the ``n!`` permutations are.
    """
    if not isinstance(x, SquareMatrix):
        x = SquareMatrix.from_rows(x)
    n = x.n
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    eps = backend.evaluator(n)
    rows = x.entries
    tuples = (
        itertools.permutations(range(1, n + 1))
        if permutations_only
        else itertools.product(range(1, n + 1), repeat=n)
    )
    total = 0
    for t in tuples:
        e = eps(t)
        if e:
            term = e
            for r, c in enumerate(t):
                term *= rows[r][c - 1]
            total += term
    return total


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _check_eps2() -> list[CheckResult]:
    tuples = list(itertools.product((1, 2), repeat=4))
    bad_delta = [t for t in tuples
                 if eps2_product_delta(*t) != epsilon_oracle(t[:2]) * epsilon_oracle(t[2:])]
    bad_closed = [t for t in tuples if eps2_product_closed(*t) != eps2_product_delta(*t)]
    return [
        CheckResult("eps2-delta-vs-oracle", not bad_delta, len(tuples), _first(bad_delta)),
        CheckResult("eps2-closed-vs-delta", not bad_closed, len(tuples), _first(bad_closed)),
    ]


def _check_eps3() -> list[CheckResult]:
    tuples = list(itertools.product((1, 2, 3), repeat=6))
    bad_delta = [t for t in tuples
                 if eps3_product_delta(*t) != epsilon_oracle(t[:3]) * epsilon_oracle(t[3:])]
    bad_closed = [t for t in tuples if eps3_product_closed(*t) != eps3_product_delta(*t)]
    return [
        CheckResult("eps3-delta-vs-oracle", not bad_delta, len(tuples), _first(bad_delta)),
        CheckResult("eps3-closed-vs-delta", not bad_closed, len(tuples), _first(bad_closed)),
    ]


def _first(bad) -> str:
    return f"first mismatch at {bad[0]}" if bad else ""


def random_integer_matrix(n: int, rng: random.Random, lo: int = -9, hi: int = 9) -> SquareMatrix:
    return SquareMatrix.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def check_determinants(
    seed: int = 0,
    count: int = 100,
    dims: Sequence[int] = (2, 3, 4),
    backends: Sequence[Backend] = (ORACLE, RATIONAL_PRODUCT, CLOSED_FORM_LOW_DIM),
) -> list[CheckResult]:
    """Compare ``det_via_epsilon`` with Bareiss elimination on seeded random matrices."""
    results = []
    for n in dims:
        rng = random.Random(f"{seed}-{n}")
        mats = [random_integer_matrix(n, rng) for _ in range(count)]
        expected = [bareiss_determinant(m.entries) for m in mats]
        for b in backends:
            if not b.supports(n):
                continue
            bad = [k for k, m in enumerate(mats) if det_via_epsilon(m, b) != expected[k]]
            detail = f"first mismatch at matrix #{bad[0]}" if bad else ""
            results.append(CheckResult(f"det-n{n}-{b.name}", not bad, count, detail))
    return results


def run_identity_suite(seed: int = 0, count: int = 100) -> list[CheckResult]:
    """All two-epsilon product checks plus the determinant comparison."""
    return _check_eps2() + _check_eps3() + check_determinants(seed=seed, count=count)
