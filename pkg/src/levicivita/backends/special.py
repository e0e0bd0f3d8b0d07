"""Hand-derived two- and three-index forms: delta, XOR, gamma, sine and sinc variants."""

from __future__ import annotations

import enum
import math

from levicivita.errors import PrecisionError
from levicivita.specfun import gamma_int, kron_delta as d, sinc

SINC_TOLERANCE = 1e-9


class R2Form(enum.Enum):
    DELTA = "delta"
    XOR = "xor"
    SIN = "sin"
    SINC = "sinc"
    GAMMA = "gamma"


class R3Form(enum.Enum):
    SIGNUM_GAMMA = "signum-gamma"
    DELTA_POLY = "delta-poly"
    DELTA_GAMMA = "delta-gamma"
    GAMMA_CLOSED = "gamma-closed"
    SIN = "sin"
    SINC_POLY = "sinc-poly"
    SINC_GAMMA = "sinc-gamma"


def _round_checked(raw: float, where) -> int:
    r = round(raw)
    if abs(raw - r) >= SINC_TOLERANCE or r not in (-1, 0, 1):
        raise PrecisionError(f"{where}: raw value {raw!r} is not an integer sign", raw)
    return r


def _check_domain(values, n):
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"indices must be integers in 1..{n}, got {tuple(values)}")


def r2_special_raw(form: R2Form, i: int, j: int) -> float:
    """Pre-rounding value of a two-index form (exact forms return ints)."""
    form = R2Form(form)
    _check_domain((i, j), 2)
    if form is R2Form.DELTA:
        return d(j - (4 - 2 * i)) - d(j - (i - 1))
    if form is R2Form.XOR:
        return (-1) ** j * ((i - 1) ^ (j - 1))
    if form is R2Form.SIN:
        return math.sin((j - i) * math.pi / 2)
    if form is R2Form.SINC:
        return sinc(math.pi * (j + 2 * i - 4)) - sinc(math.pi * (j - i + 1))
    return gamma_int(j + 1) - gamma_int(i + 1)


def r2_special(form: R2Form | str, i: int, j: int) -> int:
    """Two-index epsilon by the named form; float forms are rounded and checked."""
    raw = r2_special_raw(form, i, j)
    if isinstance(raw, int):
        return raw
    return _round_checked(raw, f"r2 {R2Form(form).value} at ({i},{j})")


def _sgn(x):
    return (x > 0) - (x < 0)


def r3_special_raw(form: R3Form, i: int, j: int, k: int) -> float:
    """Pre-rounding value of a three-index form (exact forms return ints)."""
    form = R3Form(form)
    _check_domain((i, j, k), 3)
    G = gamma_int
    if form is R3Form.SIGNUM_GAMMA:
        t = (i, j, k)
        result = 1
        for m in (1, 2, 3):
            # subscripts m - G(m) + 2 and G(m), 1-based
            result *= _sgn(t[m - G(m) + 1] - t[G(m) - 1])
        return result
    if form is R3Form.DELTA_POLY:
        a = 3 * i * i - 11 * i + 4
        b = -3 * i * i + 13 * i - 16
        return d(2 * j + a) * d(2 * k + b) - d(2 * j + b) * d(2 * k + a)
    if form is R3Form.DELTA_GAMMA:
        gi = G(i)
        a = 3 * gi - i - 4
        b = -3 * gi + 2 * i - 2
        return d(j + a) * d(k + b) - d(j + b) * d(k + a)
    if form is R3Form.GAMMA_CLOSED:
        return i * (G(j) - G(k)) - G(i) * (j - k) - G(j) * k + j * G(k)
    if form is R3Form.SIN:
        q = math.pi / 4
        return 2 * math.sin((j - i) * q) * math.sin((k - i) * q) * math.sin((k - j) * q)
    pi = math.pi
    if form is R3Form.SINC_POLY:
        a = 3 * i * i - 11 * i + 4
        b = 3 * i * i - 13 * i + 16
        return (sinc(pi * (2 * j + a)) * sinc(pi * (2 * k - b))
                - sinc(pi * (2 * k + a)) * sinc(pi * (2 * j - b)))
    gi = G(i)
    a = 3 * gi - i - 4
    b = -3 * gi + 2 * i - 2
    return (sinc(pi * (j + a)) * sinc(pi * (k + b))
            - sinc(pi * (k + a)) * sinc(pi * (j + b)))


def r3_special(form: R3Form | str, i: int, j: int, k: int) -> int:
    """Three-index epsilon by the named form; float forms are rounded and checked."""
    raw = r3_special_raw(form, i, j, k)
    if isinstance(raw, int):
        return raw
    return _round_checked(raw, f"r3 {R3Form(form).value} at ({i},{j},{k})")
