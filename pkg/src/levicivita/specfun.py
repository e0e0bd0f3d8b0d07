"""Small numeric kernel used by the delta, sinc and generalized-function forms.

Everything here is self-contained (stdlib ``math``/``cmath`` only) so the
backends can be checked against independent reference implementations.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

__all__ = [
    "gamma_int",
    "kron_delta",
    "delta_conversion",
    "sinc",
    "bessel_j0",
    "BESSEL_J0_MAX_ARG",
    "BESSEL_J0_FIRST_ZERO",
    "Family",
    "PolynomialFamily",
    "poly_eval",
    "NamedZero",
    "bessel_j0_first_zero",
    "laguerre2_first_zero",
]


def gamma_int(z: int) -> int:
    """Gamma function at a positive integer, ``(z - 1)!``, as an exact int.

    Python integers are unbounded, so there is no overflow to report; a
    non-integer or ``z < 1`` raises ``ValueError``.
    """
    if isinstance(z, bool) or not isinstance(z, int) or z < 1:
        raise ValueError(f"gamma_int needs an integer z >= 1, got {z!r}")
    return math.factorial(z - 1)


def kron_delta(a: int) -> int:
    """Kronecker delta in difference form: 1 if ``a == 0`` else 0."""
    return 1 if a == 0 else 0


def delta_conversion(z: int, n: int) -> int:
    """Closed-form replacement for ``kron_delta(z - n)`` valid on ``{1, 2, 3}``.

    Evaluates ``[2 G(z) c + z - 2](G(n) - 1) - (n G(z) - z) c + 1`` with
    ``G = gamma_int`` and ``c = cos(n pi) = (-1)**n`` kept exact.
    """
    if z not in (1, 2, 3) or n not in (1, 2, 3):
        raise ValueError(f"delta_conversion is defined for z, n in {{1,2,3}}, got ({z}, {n})")
    c = -1 if n & 1 else 1
    gz = gamma_int(z)
    return (2 * gz * c + z - 2) * (gamma_int(n) - 1) - (n * gz - z) * c + 1


def sinc(x):
    """Unnormalized sinc, ``sin(x)/x`` with ``sinc(0) = 1``. Accepts complex."""
    if x == 0:
        return 1.0
    if isinstance(x, complex):
        return cmath.sin(x) / x
    return math.sin(x) / x


BESSEL_J0_FIRST_ZERO = 2.4048255576957727
BESSEL_J0_MAX_ARG = 20.0
_SERIES_CUTOFF = 8.0


def _j0_series(x: float) -> float:
    q = -0.25 * x * x
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        total += term
        if abs(term) < 1e-17 * max(1.0, abs(total)):
            return total


def _j0_miller(x: float) -> float:
    # Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from a start order well above x,
    # normalized with J_0 + 2 * sum(J_2k) = 1.
    start = 2 * ((int(x) + 40) // 2)
    j_next, j_cur = 0.0, 1e-30
    norm = 0.0
    for k in range(start, 0, -1):
        j_prev = (2.0 * k / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if (k - 1) % 2 == 0 and k - 1 > 0:
            norm += 2.0 * j_cur
        if abs(j_cur) > 1e250:
            j_cur *= 1e-250
            j_next *= 1e-250
            norm *= 1e-250
    norm += j_cur
    return j_cur / norm


def bessel_j0(x: float) -> float:
    """Bessel function of the first kind, order zero, for real ``|x| <= 20``.

    Power series up to ``|x| = 8`` and Miller's backward recurrence above it;
    absolute error stays below 1e-12 on the supported range.
    """
    if isinstance(x, complex):
        if x.imag != 0:
            raise ValueError(f"bessel_j0 accepts real arguments only, got {x!r}")
        x = x.real
    x = abs(float(x))
    if x > BESSEL_J0_MAX_ARG:
        raise ValueError(f"bessel_j0 argument {x} exceeds the supported range |x| <= 20")
    if x <= _SERIES_CUTOFF:
        return _j0_series(x)
    return _j0_miller(x)


class Family(enum.Enum):
    HERMITE = "hermite"            # probabilists' He_n
    LAGUERRE = "laguerre"          # standard L_n, L_n(0) = 1
    GEGENBAUER1 = "gegenbauer1"    # C_n^(1), i.e. Chebyshev of the second kind
    CHEBYSHEV = "chebyshev"        # first kind T_n
    LEGENDRE = "legendre"          # standard P_n, P_n(1) = 1


@dataclass(frozen=True)
class PolynomialFamily:
    family: Family
    order: int

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"polynomial order must be an integer >= 1, got {self.order!r}")

    def __str__(self):
        return f"{self.family.value}{self.order}"


def poly_eval(p: PolynomialFamily, x):
    """Evaluate ``p`` at real or complex ``x`` with its three-term recurrence."""
    fam, order = p.family, p.order
    prev = 1.0
    if fam is Family.HERMITE:
        cur = x
        for k in range(1, order):
            prev, cur = cur, x * cur - k * prev
    elif fam is Family.LAGUERRE:
        cur = 1.0 - x
        for k in range(1, order):
            prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    elif fam is Family.GEGENBAUER1:
        cur = 2 * x
        for _ in range(1, order):
            prev, cur = cur, 2 * x * cur - prev
    elif fam is Family.CHEBYSHEV:
        cur = x
        for _ in range(1, order):
            prev, cur = cur, 2 * x * cur - prev
    elif fam is Family.LEGENDRE:
        cur = x
        for k in range(1, order):
            prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    else:  # pragma: no cover
        raise ValueError(f"unknown polynomial family {fam!r}")
    return cur


@dataclass(frozen=True)
class NamedZero:
    """A documented root of some function, e.g. the first zero of J0."""

    value: float
    description: str


def bessel_j0_first_zero() -> NamedZero:
    return NamedZero(BESSEL_J0_FIRST_ZERO, "first positive zero of J0")


def laguerre2_first_zero() -> NamedZero:
    return NamedZero(2.0 - math.sqrt(2.0), "first positive zero of L2, 2 - sqrt(2)")
