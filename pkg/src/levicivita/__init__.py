"""Levi-Civita symbol in N dimensions through many equivalent formulas.

Every backend (signum product, rational Vandermonde product, Kronecker-delta
determinant, low-dimension closed forms, generator-ratio forms and the
hand-derived two- and three-index forms) is checked against the
permutation-parity oracle :func:`epsilon_oracle`.
"""

from levicivita.backends import (
    PRESETS,
    Backend,
    BackendKind,
    EvalDiagnostics,
    GeneratorKind,
    GeneratorSpec,
    R2Form,
    R3Form,
    all_backends,
    closed_form_low_dim,
    generalized,
    generator_validity,
    generator_values,
    parse_backend,
    r2_special,
    r3_special,
    rational_product,
    straub_determinant,
    superfactorial_denominator,
)
from levicivita.core import (
    MultiIndex,
    epsilon_oracle,
    sgn_product,
    transpose,
    validate_multi_index,
)
from levicivita.enumeration import EnumerationReport, enumerate_all, verify_backend
from levicivita.identities import SquareMatrix, det_via_epsilon

__version__ = "0.1.0"
