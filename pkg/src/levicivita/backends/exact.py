"""Exact-integer backends: the rational Vandermonde product, the low-dimension
closed forms and the determinant of Kronecker deltas."""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from math import factorial

from levicivita.core import MultiIndex, as_indices
from levicivita.errors import InexactDivisionError, UnsupportedDimensionError
from levicivita.specfun import kron_delta


@lru_cache(maxsize=None)
def superfactorial_denominator(n: int) -> int:
    """``prod(k! for k in 1..n-1)``: the normalizer 1, 2, 12, 288, ... of the
    rational product for n = 2, 3, 4, 5."""
    if not isinstance(n, int) or n < 2:
        raise UnsupportedDimensionError(f"dimension must be >= 2, got {n!r}")
    result = 1
    for k in range(1, n):
        result *= factorial(k)
    return result


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{what}: {num} is not divisible by {den}")
    return q


def vandermonde_numerator(t: Sequence[int]) -> int:
    """``prod(t[p] - t[q] for p > q)`` in exact integers (0-based positions)."""
    num = 1
    for p in range(1, len(t)):
        a = t[p]
        for q in range(p):
            num *= a - t[q]
    return num


def _rational(t: tuple[int, ...]) -> int:
    return _exact_div(
        vandermonde_numerator(t), superfactorial_denominator(len(t)), "rational product"
    )


def rational_product(idx: MultiIndex | Sequence[int]) -> int:
    """Epsilon as the index Vandermonde product over the superfactorial.

    Pairs are walked as in the nested product over ``m = 1..N-1`` and
    ``n = 1..N-m`` with factors ``(i_{N+1-m} - i_n) / (N+1-m-n)``; the numerator
    and denominator are accumulated separately so the division is exact.
    """
    return _rational(as_indices(idx))


def _closed_form(t: tuple[int, ...]) -> int:
    n = len(t)
    if n == 2:
        i, j = t
        return j - i
    if n == 3:
        i, j, k = t
        return _exact_div((j - i) * (k - i) * (k - j), 2, "3-d closed form")
    if n == 4:
        i, j, k, l = t
        return _exact_div(
            (j - i) * (k - i) * (l - i) * (k - j) * (l - j) * (l - k), 12, "4-d closed form"
        )
    raise UnsupportedDimensionError(f"closed form exists for n in 2..4, got n={n}")


def closed_form_low_dim(idx: MultiIndex | Sequence[int]) -> int:
    """``j - i``, ``(j-i)(k-i)(k-j)/2`` or the six-factor product over 12."""
    return _closed_form(as_indices(idx))


def jaramillo_3d(i: int, j: int, k: int) -> int:
    """The older three-index form ``(i-j)(j-k)(k-i)/2``."""
    for v in (i, j, k):
        if v not in (1, 2, 3):
            raise ValueError(f"indices must lie in 1..3, got {(i, j, k)}")
    return _exact_div((i - j) * (j - k) * (k - i), 2, "jaramillo form")


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in matrix]
    return _bareiss_inplace(m)


def _bareiss_inplace(m: list[list[int]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            if a == 0:
                if pivot != prev:
                    for j in range(k + 1, n):
                        row_i[j] = row_i[j] * pivot // prev
                continue
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def straub_matrix(idx: MultiIndex | Sequence[int]) -> list[list[int]]:
    """``M[r][c] = kron_delta(i_r - c)`` for 1-based row r and column c."""
    t = as_indices(idx)
    n = len(t)
    return [[kron_delta(v - c) for c in range(1, n + 1)] for v in t]


def _straub(t: tuple[int, ...]) -> int:
    # same matrix as straub_matrix: row r is kron_delta(i_r - c), a unit row
    n = len(t)
    rows = []
    for v in t:
        row = [0] * n
        row[v - 1] = 1
        rows.append(row)
    return _bareiss_inplace(rows)


def straub_determinant(idx: MultiIndex | Sequence[int]) -> int:
    """Epsilon as the N x N determinant of Kronecker deltas."""
    return _straub(as_indices(idx))
