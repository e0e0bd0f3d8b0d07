"""Every epsilon evaluation strategy, each checkable against the oracle."""

from levicivita.backends.exact import (
    bareiss_determinant,
    closed_form_low_dim,
    jaramillo_3d,
    rational_product,
    straub_determinant,
    straub_matrix,
    superfactorial_denominator,
    vandermonde_numerator,
)
from levicivita.backends.generalized import (
    PRESETS,
    ROUNDING_TOLERANCE,
    EvalDiagnostics,
    GeneralizedEvaluator,
    GeneratorKind,
    GeneratorSpec,
    generalized,
    generator_validity,
    generator_values,
    random_generator,
)
from levicivita.backends.registry import (
    CLOSED_FORM_LOW_DIM,
    EXACT_BACKENDS,
    ORACLE,
    RATIONAL_PRODUCT,
    SGN_PRODUCT,
    STRAUB_DETERMINANT,
    Backend,
    BackendKind,
    all_backends,
    generalized_backend,
    parse_backend,
)
from levicivita.backends.special import R2Form, R3Form, r2_special, r2_special_raw, r3_special, r3_special_raw
