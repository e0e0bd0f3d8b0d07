"""Acceptance criteria, each at its stated tolerance and time budget.

Every test prints one ``PASS``/``FAIL`` line; the lines are also collected
into a summary section at the end of the pytest run.
"""

import contextlib
import itertools
import math
import random
import time

import pytest

from levicivita.backends import (
    CLOSED_FORM_LOW_DIM,
    ORACLE,
    PRESETS,
    RATIONAL_PRODUCT,
    SGN_PRODUCT,
    STRAUB_DETERMINANT,
    GeneratorKind,
    GeneratorSpec,
    R2Form,
    R3Form,
    all_backends,
    closed_form_low_dim,
    jaramillo_3d,
    r2_special,
    r2_special_raw,
    r3_special,
    r3_special_raw,
    random_generator,
    superfactorial_denominator,
)
from levicivita.backends.generalized import GeneralizedEvaluator
from levicivita.bench import BenchConfig, run_bench
from levicivita.core import transpose
from levicivita.enumeration import enumerate_all, iter_tuples
from levicivita.identities import (
    check_determinants,
    eps2_product_closed,
    eps2_product_delta,
    eps3_product_closed,
    eps3_product_delta,
)
from levicivita.specfun import (
    BESSEL_J0_FIRST_ZERO,
    Family,
    PolynomialFamily,
    bessel_j0,
    delta_conversion,
    gamma_int,
    kron_delta,
    laguerre2_first_zero,
    poly_eval,
)

from conftest import ACCEPTANCE_LINES, brute_sign


@contextlib.contextmanager
def criterion(label, budget_s=None):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        if budget_s is not None:
            assert elapsed < budget_s, f"took {elapsed:.2f} s, budget {budget_s} s"
    except BaseException as exc:
        line = f"FAIL {label} ({time.perf_counter() - t0:.2f} s): {type(exc).__name__}: {exc}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"PASS {label} ({elapsed:.2f} s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_01_counts():
    with criterion("1  nonzero count = n! for n = 2..7 (rational product)", 10):
        for n in range(2, 8):
            r = enumerate_all(n, RATIONAL_PRODUCT)
            f = math.factorial(n)
            assert r.count_plus == r.count_minus == f // 2
            assert r.count_zero == n**n - f
        r5 = enumerate_all(5, RATIONAL_PRODUCT, list_nonzero=True)
        assert len(r5.nonzero) == 120 == math.factorial(5)


def test_criterion_02_exact_backends_agree():
    with criterion("2  oracle, sgn, rational, determinant agree for n = 2..7", 30):
        for n in range(2, 8):
            tuples = list(iter_tuples(n))
            reference = [brute_sign(t) for t in tuples] if n <= 5 else None
            oracle = ORACLE.evaluator(n)
            expected = [oracle(t) for t in tuples]
            if reference is not None:
                assert expected == reference
            for b in (SGN_PRODUCT, RATIONAL_PRODUCT, STRAUB_DETERMINANT):
                ev = b.evaluator(n)
                assert [ev(t) for t in tuples] == expected, (b.name, n)


# reference sign table for four indices, grouped by sign
PLUS_4D = [(1, 2, 3, 4), (1, 3, 4, 2), (1, 4, 2, 3), (2, 1, 4, 3), (2, 3, 1, 4), (2, 4, 3, 1),
           (3, 1, 2, 4), (3, 2, 4, 1), (3, 4, 1, 2), (4, 1, 3, 2), (4, 2, 1, 3), (4, 3, 2, 1)]
MINUS_4D = [(1, 3, 2, 4), (1, 4, 3, 2), (1, 2, 4, 3), (2, 4, 1, 3), (2, 1, 3, 4), (2, 3, 4, 1),
            (3, 2, 1, 4), (3, 4, 2, 1), (3, 1, 4, 2), (4, 3, 1, 2), (4, 1, 2, 3), (4, 2, 3, 1)]


def test_criterion_03_low_dim_closed_forms():
    with criterion("3  low-dimension closed forms and 4-index sign table", 1):
        for n in (2, 3, 4):
            for t in itertools.product(range(1, n + 1), repeat=n):
                assert closed_form_low_dim(t) == brute_sign(t)
        for t in itertools.product((1, 2, 3), repeat=3):
            assert jaramillo_3d(*t) == brute_sign(t)
        for t in PLUS_4D:
            assert closed_form_low_dim(t) == 1
        for t in MINUS_4D:
            assert closed_form_low_dim(t) == -1
        assert len(set(PLUS_4D + MINUS_4D)) == 24


def _identity_random():
    return random_generator(GeneratorKind.IDENTITY, 5, seed=2024)


GENERATORS = {
    "a cosine lam=0.9": lambda: GeneratorSpec(GeneratorKind.COSINE, 0.9),
    "b cosine lam=pi/4": lambda: GeneratorSpec(GeneratorKind.COSINE, math.pi / 4),
    "c bessel-j0 lam=z1": lambda: GeneratorSpec(GeneratorKind.BESSEL_J0, BESSEL_J0_FIRST_ZERO),
    "d gamma-shifted lam=1": lambda: GeneratorSpec(GeneratorKind.GAMMA_SHIFTED, 1),
    "e laguerre2 lam=2-sqrt2": lambda: GeneratorSpec(
        GeneratorKind.POLYNOMIAL, 2 - math.sqrt(2), PolynomialFamily(Family.LAGUERRE, 2)),
    "f identity seeded complex lam": _identity_random,
}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("label", list(GENERATORS))
def test_criterion_04_generalized(label, n):
    with criterion(f"4{label[0]} {label[2:]} n={n}: matches oracle, deviation < 1e-6", 60):
        gen = GENERATORS[label]()
        ev = GeneralizedEvaluator(gen, n)
        worst = 0.0
        for t in iter_tuples(n):
            sign, diag = ev.evaluate(t)
            assert sign == brute_sign(t), t
            worst = max(worst, diag.deviation)
        assert worst < 1e-6


def test_criterion_05_special_forms():
    with criterion("5  two- and three-index special forms", 1):
        float_r2 = {R2Form.SIN, R2Form.SINC}
        float_r3 = {R3Form.SIN, R3Form.SINC_POLY, R3Form.SINC_GAMMA}
        for form in R2Form:
            for t in itertools.product((1, 2), repeat=2):
                s = brute_sign(t)
                raw = r2_special_raw(form, *t)
                assert r2_special(form, *t) == s
                if form in float_r2:
                    assert abs(raw - s) < 1e-9
                else:
                    assert raw == s and isinstance(raw, int)
        for form in R3Form:
            for t in itertools.product((1, 2, 3), repeat=3):
                s = brute_sign(t)
                raw = r3_special_raw(form, *t)
                assert r3_special(form, *t) == s
                if form in float_r3:
                    assert abs(raw - s) < 1e-9
                else:
                    assert raw == s and isinstance(raw, int)


def test_criterion_06_identity_suites():
    with criterion("6  epsilon-product identities and determinant via epsilon", 5):
        for i, j, m, n in itertools.product((1, 2), repeat=4):
            e = brute_sign((i, j)) * brute_sign((m, n))
            assert eps2_product_delta(i, j, m, n) == e == eps2_product_closed(i, j, m, n)
        for t in itertools.product((1, 2, 3), repeat=6):
            e = brute_sign(t[:3]) * brute_sign(t[3:])
            assert eps3_product_delta(*t) == e == eps3_product_closed(*t)
        results = check_determinants(seed=0, count=100, dims=(2, 3, 4))
        assert {r.cases for r in results} == {100}
        assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_criterion_07_kernel_identities():
    with criterion("7  delta conversion, gamma quadratic, delta polynomials, named zeros", 1):
        for z, n in itertools.product((1, 2, 3), repeat=2):
            g = math.gamma
            formula = ((2 * g(z) * math.cos(n * math.pi) + z - 2) * (g(n) - 1)
                       - (n * g(z) - z) * math.cos(n * math.pi) + 1)
            assert round(formula) == kron_delta(z - n) == delta_conversion(z, n)
            assert abs(formula - round(formula)) < 1e-12
        for z in (1, 2, 3):
            assert 2 * gamma_int(z) == z * z - 3 * z + 4
        for i in (1, 2):
            assert kron_delta(i - 1) == 2 - i and kron_delta(i - 2) == i - 1
        for i in (1, 2, 3):
            assert 2 * kron_delta(i - 1) == (i - 2) * (i - 3)
            assert kron_delta(i - 2) == (1 - i) * (i - 3)
            assert 2 * kron_delta(i - 3) == (i - 1) * (i - 2)
        assert abs(bessel_j0(BESSEL_J0_FIRST_ZERO)) < 1e-10
        assert abs(poly_eval(PolynomialFamily(Family.LAGUERRE, 2), laguerre2_first_zero().value)) < 1e-10


def test_criterion_08_prefactors():
    with criterion("8  superfactorial prefactors 1, 2, 12, 288"):
        assert [superfactorial_denominator(n) for n in (2, 3, 4, 5)] == [1, 2, 12, 288]


def _property_backends():
    for n in (2, 3, 4, 5):
        for b in all_backends(n):
            yield n, b
    for n in (6, 7):
        for b in (ORACLE, SGN_PRODUCT, RATIONAL_PRODUCT, STRAUB_DETERMINANT):
            yield n, b


def test_criterion_09_properties():
    with criterion("9  antisymmetry and zero-on-repeat, 1000 cases each per backend", 5):
        checked = 0
        for n, b in _property_backends():
            ev = b.evaluator(n)
            rng = random.Random(f"{b.name}-{n}")
            for k in range(1000):
                perm = tuple(rng.sample(range(1, n + 1), n))
                t = perm if k % 2 else tuple(rng.randint(1, n) for _ in range(n))
                p, q = rng.sample(range(1, n + 1), 2)
                assert ev(transpose(t, p, q).indices) == -ev(t), (b.name, t, p, q)
            for _ in range(1000):
                t = [rng.randint(1, n) for _ in range(n)]
                p, q = rng.sample(range(n), 2)
                t[q] = t[p]
                assert ev(tuple(t)) == 0, (b.name, t)
            checked += 1
        assert checked > 0


def test_criterion_10_bench_smoke():
    with criterion("10 bench n = 2..5, three backends: 12 records", 60):
        backends = (ORACLE, RATIONAL_PRODUCT, STRAUB_DETERMINANT)
        records = run_bench(BenchConfig(2, 5, backends))
        assert len(records) == 12
        for r in records:
            assert r.tuples_evaluated == r.n**r.n * 3
        print("\n".join(f"   {r.backend:20s} n={r.n} {r.median_ns_per_eval:9.1f} ns/eval"
                        for r in records))
