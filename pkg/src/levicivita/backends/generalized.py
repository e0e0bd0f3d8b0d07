"""Epsilon as a ratio of generator differences.

For a generator ``G`` and parameter ``lam`` the symbol is

    prod over m = 1..N-1, n = 1..N-m of
        (G(i_{N+1-m} lam) - G(i_n lam)) / (G((N+1-m) lam) - G(n lam))

which reproduces the permutation sign whenever ``G`` separates the points
``lam, 2 lam, ..., N lam``.
"""

from __future__ import annotations

import cmath
import enum
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass

from levicivita.core import MultiIndex, as_indices
from levicivita.errors import (
    DegenerateGeneratorError,
    GeneratorDomainError,
    InexactDivisionError,
    PrecisionError,
)
from levicivita.specfun import (
    BESSEL_J0_FIRST_ZERO,
    BESSEL_J0_MAX_ARG,
    Family,
    PolynomialFamily,
    bessel_j0,
    gamma_int,
    laguerre2_first_zero,
    poly_eval,
)

ROUNDING_TOLERANCE = 1e-6
SEPARATION_TOLERANCE = 1e-9


class GeneratorKind(enum.Enum):
    IDENTITY = "identity"
    COSINE = "cosine"
    BESSEL_J0 = "bessel-j0"
    GAMMA_SHIFTED = "gamma-shifted"   # G(z) = Gamma(z + 1), lam pinned to 1
    POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    lam: complex | float | int = 1
    polynomial: PolynomialFamily | None = None

    def __post_init__(self):
        if self.kind is GeneratorKind.GAMMA_SHIFTED and self.lam != 1:
            raise GeneratorDomainError(
                f"the shifted gamma generator requires lam == 1 exactly, got {self.lam!r}"
            )
        if self.kind is GeneratorKind.GAMMA_SHIFTED:
            object.__setattr__(self, "lam", 1)
        if self.kind is GeneratorKind.BESSEL_J0:
            if isinstance(self.lam, complex):
                if self.lam.imag != 0:
                    raise GeneratorDomainError(
                        f"the Bessel generator requires a real lam, got {self.lam!r}"
                    )
                object.__setattr__(self, "lam", self.lam.real)
        if self.kind is GeneratorKind.POLYNOMIAL and self.polynomial is None:
            raise GeneratorDomainError("a polynomial generator needs a PolynomialFamily")
        if self.kind is not GeneratorKind.POLYNOMIAL and self.polynomial is not None:
            raise GeneratorDomainError(f"{self.kind.value} takes no polynomial family")

    @property
    def label(self) -> str:
        lam = self.lam
        if isinstance(lam, complex):
            lam_s = f"{lam.real:.12g}{lam.imag:+.12g}j"
        else:
            lam_s = f"{lam:.12g}"
        name = str(self.polynomial) if self.polynomial else self.kind.value
        return f"{name}(lam={lam_s})"

    def __call__(self, z):
        """Evaluate the generator itself at ``z``."""
        kind = self.kind
        if kind is GeneratorKind.IDENTITY:
            return z
        if kind is GeneratorKind.COSINE:
            return cmath.cos(z) if isinstance(z, complex) else math.cos(z)
        if kind is GeneratorKind.BESSEL_J0:
            return bessel_j0(z)
        if kind is GeneratorKind.GAMMA_SHIFTED:
            return gamma_int(z + 1)
        return poly_eval(self.polynomial, z)


@dataclass(frozen=True)
class EvalDiagnostics:
    raw_value: complex
    rounded: int
    deviation: float


def generator_values(gen: GeneratorSpec, n: int) -> list:
    """``[G(1 lam), ..., G(n lam)]``.

    Exact generators (shifted gamma, identity with an int ``lam``) return ints;
    everything else returns floats or complex numbers.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    lam = gen.lam
    if gen.kind is GeneratorKind.BESSEL_J0 and abs(n * lam) > BESSEL_J0_MAX_ARG:
        raise GeneratorDomainError(
            f"bessel-j0 at n={n}, lam={lam} needs |n lam| <= {BESSEL_J0_MAX_ARG}"
        )
    return [gen(k * lam) for k in range(1, n + 1)]


def _is_exact(values) -> bool:
    return all(isinstance(v, int) for v in values)


def generator_validity(gen: GeneratorSpec, n: int) -> bool:
    """True iff every pair of generator values is separated.

    Exact values must differ; floating values by more than 1e-9 in magnitude.
    Domain problems count as invalid rather than raising.
    """
    try:
        values = generator_values(gen, n)
    except (GeneratorDomainError, ValueError, OverflowError):
        return False
    exact = _is_exact(values)
    for p in range(1, n):
        for q in range(p):
            d = abs(values[p] - values[q])
            if (exact and d == 0) or (not exact and not d > SEPARATION_TOLERANCE):
                return False
    return True


class GeneralizedEvaluator:
    """Generator values and denominators for one (spec, n), reused across tuples."""

    def __init__(self, gen: GeneratorSpec, n: int, tolerance: float = ROUNDING_TOLERANCE):
        if not generator_validity(gen, n):
            raise DegenerateGeneratorError(
                f"generator {gen.label} does not separate 1..{n} times lam"
            )
        self.gen = gen
        self.n = n
        self.tolerance = tolerance
        self.values = generator_values(gen, n)
        self.exact = _is_exact(self.values)
        g = self.values
        # pairs (p, q), p > q, 0-based, in the nested-product order m = 1..N-1, n = 1..N-m
        self.pairs = [(n - m, q) for m in range(1, n) for q in range(n - m)]
        self.denominators = [g[p] - g[q] for p, q in self.pairs]
        if self.exact:
            den = 1
            for d in self.denominators:
                den *= d
            self.denominator_product = den

    def raw(self, t: Sequence[int]):
        g = self.values
        if self.exact:
            num = 1
            for p, q in self.pairs:
                num *= g[t[p] - 1] - g[t[q] - 1]
            v, r = divmod(num, self.denominator_product)
            if r:
                raise InexactDivisionError(
                    f"{self.gen.label}: {num} not divisible by {self.denominator_product}"
                )
            return v
        result = 1.0
        for (p, q), den in zip(self.pairs, self.denominators):
            result *= (g[t[p] - 1] - g[t[q] - 1]) / den
        return result

    def evaluate(self, t: Sequence[int]) -> tuple[int, EvalDiagnostics]:
        raw = self.raw(t)
        if self.exact:
            if raw not in (-1, 0, 1):
                raise PrecisionError(f"exact value {raw} outside {{-1, 0, 1}} at {tuple(t)}", raw)
            return raw, EvalDiagnostics(complex(raw), raw, 0.0)
        raw = complex(raw)
        rounded = round(raw.real)
        deviation = abs(raw - rounded)
        if deviation >= self.tolerance or rounded not in (-1, 0, 1):
            raise PrecisionError(
                f"{self.gen.label} at {tuple(t)}: raw value {raw} is not within "
                f"{self.tolerance} of -1, 0 or 1",
                raw,
            )
        return rounded, EvalDiagnostics(raw, rounded, deviation)

    def sign(self, t: Sequence[int]) -> int:
        return self.evaluate(t)[0]


def generalized(
    idx: MultiIndex | Sequence[int],
    gen: GeneratorSpec,
    tolerance: float = ROUNDING_TOLERANCE,
) -> tuple[int, EvalDiagnostics]:
    """Evaluate epsilon through ``gen``; returns ``(sign, diagnostics)``.

    Raises :class:`DegenerateGeneratorError` if the generator does not separate
    the points, and :class:`PrecisionError` if the raw value misses an integer
    by ``tolerance`` or more.
    """
    t = as_indices(idx)
    return GeneralizedEvaluator(gen, len(t), tolerance).evaluate(t)


def _presets() -> dict[str, GeneratorSpec]:
    return {
        "identity": GeneratorSpec(GeneratorKind.IDENTITY, 1),
        "cos-half-pi": GeneratorSpec(GeneratorKind.COSINE, math.pi / 2),
        "cos-quarter-pi": GeneratorSpec(GeneratorKind.COSINE, math.pi / 4),
        "bessel-z1": GeneratorSpec(GeneratorKind.BESSEL_J0, BESSEL_J0_FIRST_ZERO),
        "gamma-shifted": GeneratorSpec(GeneratorKind.GAMMA_SHIFTED, 1),
        "laguerre2-zero": GeneratorSpec(
            GeneratorKind.POLYNOMIAL,
            laguerre2_first_zero().value,
            PolynomialFamily(Family.LAGUERRE, 2),
        ),
    }


PRESETS: dict[str, GeneratorSpec] = _presets()


def random_generator(
    kind: GeneratorKind,
    n: int,
    seed: int | None = None,
    polynomial: PolynomialFamily | None = None,
    max_tries: int = 1000,
) -> GeneratorSpec:
    """Draw ``lam`` as a standard complex normal until the generator is valid at ``n``.

    The Bessel generator draws a real ``lam``; the shifted gamma has nothing
    to draw and is returned at ``lam = 1``.
    """
    if kind is GeneratorKind.GAMMA_SHIFTED:
        return GeneratorSpec(kind, 1)
    rng = random.Random(seed)
    for _ in range(max_tries):
        if kind is GeneratorKind.BESSEL_J0:
            lam = rng.gauss(0.0, 1.0)
        else:
            lam = complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        spec = GeneratorSpec(kind, lam, polynomial)
        if generator_validity(spec, n):
            return spec
    raise DegenerateGeneratorError(
        f"no valid lam found for {kind.value} at n={n} in {max_tries} draws"
    )
