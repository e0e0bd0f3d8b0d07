"""Index domain, the definitional permutation-parity oracle and the signum product.

All public functions use 1-based indices: a multi-index of dimension ``n`` is a
tuple ``(i_1, ..., i_n)`` with every entry in ``1..n``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

__all__ = [
    "MultiIndex",
    "MultiIndexError",
    "IndexLengthError",
    "IndexRangeError",
    "validate_multi_index",
    "as_indices",
    "epsilon_oracle",
    "sgn",
    "sgn_factors",
    "sgn_product",
    "transpose",
]


class MultiIndexError(ValueError):
    """Base class for malformed multi-indices."""


class IndexLengthError(MultiIndexError):
    """The number of indices does not match the dimension."""


class IndexRangeError(MultiIndexError):
    """An index (or a position) lies outside ``1..n``."""


@dataclass(frozen=True)
class MultiIndex:
    """A validated N-tuple of 1-based indices.

    Build one with :func:`validate_multi_index`; the constructor re-checks the
    invariants so a hand-built instance cannot be malformed either.
    """

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise IndexLengthError(f"dimension must be an integer >= 2, got {self.n!r}")
        if len(self.indices) != self.n:
            raise IndexLengthError(
                f"expected {self.n} indices, got {len(self.indices)}: {list(self.indices)}"
            )
        for pos, value in enumerate(self.indices, start=1):
            if not 1 <= value <= self.n:
                raise IndexRangeError(
                    f"index {value} at position {pos} is outside 1..{self.n}"
                )

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return self.n

    def __str__(self):
        return "(" + ",".join(map(str, self.indices)) + ")"


def validate_multi_index(n: int, raw: Iterable[int]) -> MultiIndex:
    """Return a :class:`MultiIndex`, raising a distinguishable error otherwise.

    >>> validate_multi_index(3, [1, 2, 3])
    MultiIndex(n=3, indices=(1, 2, 3))
    """
    values = []
    for v in raw:
        if isinstance(v, bool) or int(v) != v:
            raise IndexRangeError(f"index {v!r} is not an integer")
        values.append(int(v))
    return MultiIndex(n, tuple(values))


def as_indices(idx: MultiIndex | Sequence[int]) -> tuple[int, ...]:
    """Plain index tuple for ``idx``; bare sequences are validated with n = len."""
    if isinstance(idx, MultiIndex):
        return idx.indices
    return validate_multi_index(len(idx), idx).indices


def _oracle(t: tuple[int, ...]) -> int:
    n = len(t)
    inversions = 0
    for p in range(n):
        a = t[p]
        for q in range(p + 1, n):
            b = t[q]
            if a == b:
                return 0
            if a > b:
                inversions += 1
    return -1 if inversions & 1 else 1


def epsilon_oracle(idx: MultiIndex | Sequence[int]) -> int:
    """Levi-Civita symbol by definition: 0 on a repeat, else the inversion parity.

    >>> epsilon_oracle([2, 1, 3])
    -1
    """
    return _oracle(as_indices(idx))


def sgn(x: int | float) -> int:
    """Sign of ``x`` with ``sgn(0) = 0``."""
    return (x > 0) - (x < 0)


def sgn_factors(idx: MultiIndex | Sequence[int]) -> list[int]:
    """The N(N-1)/2 factors ``sgn(i_p - i_q)``, p > q, in product order."""
    t = as_indices(idx)
    return [sgn(t[p] - t[q]) for p in range(1, len(t)) for q in range(p)]


def _sgn_product(t: tuple[int, ...]) -> int:
    n = len(t)
    result = 1
    for p in range(1, n):
        a = t[p]
        for q in range(p):
            d = a - t[q]
            result *= (d > 0) - (d < 0)
    return result


def sgn_product(idx: MultiIndex | Sequence[int]) -> int:
    """Product of ``sgn(i_n - i_m)`` over all pairs n > m."""
    return _sgn_product(as_indices(idx))


def transpose(idx: MultiIndex | Sequence[int], p: int, q: int) -> MultiIndex:
    """Copy of ``idx`` with the entries at 1-based positions ``p`` and ``q`` swapped."""
    t = list(as_indices(idx))
    n = len(t)
    for pos in (p, q):
        if not 1 <= pos <= n:
            raise IndexRangeError(f"position {pos} is outside 1..{n}")
    if p == q:
        raise IndexRangeError(f"transposition needs two distinct positions, got {p} twice")
    t[p - 1], t[q - 1] = t[q - 1], t[p - 1]
    return MultiIndex(n, tuple(t))
