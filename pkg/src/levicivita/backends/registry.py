"""Backend identifiers: one value naming an evaluation strategy, with a fast
per-dimension evaluator for sweeps and a kebab-case name for the CLI."""

from __future__ import annotations

import enum
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from levicivita.backends.exact import _closed_form, _rational, _straub
from levicivita.backends.generalized import (
    PRESETS,
    GeneralizedEvaluator,
    GeneratorKind,
    GeneratorSpec,
    generator_validity,
    random_generator,
)
from levicivita.backends.special import R2Form, R3Form, r2_special, r3_special
from levicivita.core import MultiIndex, _oracle, _sgn_product, as_indices
from levicivita.errors import DegenerateGeneratorError, UnsupportedDimensionError


class BackendKind(enum.Enum):
    ORACLE = "oracle"
    SGN_PRODUCT = "sgn-product"
    RATIONAL_PRODUCT = "rational-product"
    STRAUB_DETERMINANT = "straub-determinant"
    CLOSED_FORM_LOW_DIM = "closed-form"
    GENERALIZED = "generalized"
    R2_SPECIAL = "r2-special"
    R3_SPECIAL = "r3-special"


_EXACT = {
    BackendKind.ORACLE: _oracle,
    BackendKind.SGN_PRODUCT: _sgn_product,
    BackendKind.RATIONAL_PRODUCT: _rational,
    BackendKind.STRAUB_DETERMINANT: _straub,
    BackendKind.CLOSED_FORM_LOW_DIM: _closed_form,
}


@dataclass(frozen=True)
class Backend:
    """An epsilon evaluation strategy.

    ``generator`` is required for ``GENERALIZED``; ``form`` (an :class:`R2Form`
    or :class:`R3Form`) for the two special kinds.
    """

    kind: BackendKind
    generator: GeneratorSpec | None = None
    form: R2Form | R3Form | None = None

    def __post_init__(self):
        kind = BackendKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is BackendKind.GENERALIZED and self.generator is None:
            raise ValueError("the generalized backend needs a GeneratorSpec")
        if kind is not BackendKind.GENERALIZED and self.generator is not None:
            raise ValueError(f"{kind.value} takes no generator")
        if kind is BackendKind.R2_SPECIAL:
            object.__setattr__(self, "form", R2Form(self.form))
        elif kind is BackendKind.R3_SPECIAL:
            object.__setattr__(self, "form", R3Form(self.form))
        elif self.form is not None:
            raise ValueError(f"{kind.value} takes no form")

    @property
    def name(self) -> str:
        if self.generator is not None:
            return f"{self.kind.value}:{self.generator.label}"
        if self.form is not None:
            return f"{self.kind.value}:{self.form.value}"
        return self.kind.value

    def __str__(self):
        return self.name

    @property
    def is_floating(self) -> bool:
        if self.kind is BackendKind.GENERALIZED:
            return not generator_is_exact(self.generator)
        if self.kind is BackendKind.R2_SPECIAL:
            return self.form in (R2Form.SIN, R2Form.SINC)
        if self.kind is BackendKind.R3_SPECIAL:
            return self.form in (R3Form.SIN, R3Form.SINC_POLY, R3Form.SINC_GAMMA)
        return False

    def supports(self, n: int) -> bool:
        try:
            self.check(n)
        except (UnsupportedDimensionError, DegenerateGeneratorError):
            return False
        return True

    def check(self, n: int) -> None:
        """Raise if this backend cannot evaluate dimension ``n``."""
        if not isinstance(n, int) or n < 2:
            raise UnsupportedDimensionError(f"dimension must be an integer >= 2, got {n!r}")
        kind = self.kind
        if kind is BackendKind.CLOSED_FORM_LOW_DIM and n not in (2, 3, 4):
            raise UnsupportedDimensionError(f"closed-form covers n in 2..4, not {n}")
        if kind is BackendKind.R2_SPECIAL and n != 2:
            raise UnsupportedDimensionError(f"r2-special is two-dimensional, not n={n}")
        if kind is BackendKind.R3_SPECIAL and n != 3:
            raise UnsupportedDimensionError(f"r3-special is three-dimensional, not n={n}")
        if kind is BackendKind.GENERALIZED and not generator_validity(self.generator, n):
            raise DegenerateGeneratorError(
                f"generator {self.generator.label} is degenerate at n={n}"
            )

    def evaluator(self, n: int) -> Callable[[Sequence[int]], int]:
        """A function from a valid 1-based index tuple of length ``n`` to its sign."""
        self.check(n)
        kind = self.kind
        if kind in _EXACT:
            return _EXACT[kind]
        if kind is BackendKind.GENERALIZED:
            return GeneralizedEvaluator(self.generator, n).sign
        form = self.form
        if kind is BackendKind.R2_SPECIAL:
            return lambda t: r2_special(form, *t)
        return lambda t: r3_special(form, *t)

    def evaluate(self, idx: MultiIndex | Sequence[int]) -> int:
        t = as_indices(idx)
        return self.evaluator(len(t))(t)


def generator_is_exact(gen: GeneratorSpec) -> bool:
    if gen.kind is GeneratorKind.GAMMA_SHIFTED:
        return True
    return gen.kind is GeneratorKind.IDENTITY and isinstance(gen.lam, int)


ORACLE = Backend(BackendKind.ORACLE)
SGN_PRODUCT = Backend(BackendKind.SGN_PRODUCT)
RATIONAL_PRODUCT = Backend(BackendKind.RATIONAL_PRODUCT)
STRAUB_DETERMINANT = Backend(BackendKind.STRAUB_DETERMINANT)
CLOSED_FORM_LOW_DIM = Backend(BackendKind.CLOSED_FORM_LOW_DIM)
EXACT_BACKENDS = (ORACLE, SGN_PRODUCT, RATIONAL_PRODUCT, STRAUB_DETERMINANT)


def generalized_backend(gen: GeneratorSpec | str) -> Backend:
    if isinstance(gen, str):
        gen = PRESETS[gen]
    return Backend(BackendKind.GENERALIZED, generator=gen)


def parse_backend(text: str) -> Backend:
    """Parse ``name`` or ``name:arg``.

    ``arg`` is the form for ``r2-special``/``r3-special`` and a preset name for
    ``generalized`` (see :data:`PRESETS`).
    """
    name, _, arg = text.strip().partition(":")
    try:
        kind = BackendKind(name)
    except ValueError:
        known = ", ".join(k.value for k in BackendKind)
        raise ValueError(f"unknown backend {name!r}; expected one of {known}") from None
    if kind is BackendKind.GENERALIZED:
        if arg not in PRESETS:
            raise ValueError(
                f"generalized needs a preset, one of {', '.join(PRESETS)}; got {arg!r}"
            )
        return generalized_backend(arg)
    if kind in (BackendKind.R2_SPECIAL, BackendKind.R3_SPECIAL):
        forms = R2Form if kind is BackendKind.R2_SPECIAL else R3Form
        try:
            return Backend(kind, form=forms(arg))
        except ValueError:
            known = ", ".join(f.value for f in forms)
            raise ValueError(f"{kind.value} needs a form, one of {known}; got {arg!r}") from None
    if arg:
        raise ValueError(f"{kind.value} takes no argument, got {arg!r}")
    return Backend(kind)


def all_backends(n: int, seed: int = 0) -> list[Backend]:
    """Every backend that supports dimension ``n``.

    Includes the shipped generator presets valid at ``n``, the cosine at
    ``lam = 0.9`` and the identity at a seeded random complex ``lam``.
    """
    out = list(EXACT_BACKENDS)
    if n in (2, 3, 4):
        out.append(CLOSED_FORM_LOW_DIM)
    if n == 2:
        out.extend(Backend(BackendKind.R2_SPECIAL, form=f) for f in R2Form)
    if n == 3:
        out.extend(Backend(BackendKind.R3_SPECIAL, form=f) for f in R3Form)
    gens = list(PRESETS.values())
    gens.append(GeneratorSpec(GeneratorKind.COSINE, 0.9))
    gens.append(random_generator(GeneratorKind.IDENTITY, n, seed=seed))
    for gen in gens:
        b = generalized_backend(gen)
        if b.supports(n):
            out.append(b)
    return out

