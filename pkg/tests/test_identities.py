import itertools
import math
import random

import numpy as np
import pytest

from levicivita.backends import CLOSED_FORM_LOW_DIM, ORACLE, RATIONAL_PRODUCT, STRAUB_DETERMINANT
from levicivita.core import epsilon_oracle
from levicivita.identities import (
    SquareMatrix,
    check_determinants,
    det_via_epsilon,
    eps2_product_closed,
    eps2_product_delta,
    eps3_product_closed,
    eps3_product_delta,
    random_integer_matrix,
    run_identity_suite,
)

T2 = list(itertools.product((1, 2), repeat=4))
T3 = list(itertools.product((1, 2, 3), repeat=6))


@pytest.mark.parametrize("args, expected", [((1, 2, 1, 2), 1), ((1, 2, 2, 1), -1), ((1, 1, 1, 2), 0)])
def test_eps2_delta_examples(args, expected):
    assert eps2_product_delta(*args) == expected


@pytest.mark.parametrize("args, expected", [((1, 2, 1, 2), 1), ((2, 1, 1, 2), -1), ((1, 1, 2, 1), 0)])
def test_eps2_closed_examples(args, expected):
    assert eps2_product_closed(*args) == expected


@pytest.mark.parametrize("args, expected", [
    ((1, 2, 3, 1, 2, 3), 1), ((1, 2, 3, 1, 3, 2), -1), ((1, 1, 3, 1, 2, 3), 0)])
def test_eps3_delta_examples(args, expected):
    assert eps3_product_delta(*args) == expected


@pytest.mark.parametrize("args, expected", [
    ((1, 2, 3, 1, 2, 3), 1), ((3, 2, 1, 1, 2, 3), -1), ((2, 2, 1, 1, 2, 3), 0)])
def test_eps3_closed_examples(args, expected):
    assert eps3_product_closed(*args) == expected


def test_eps2_exhaustive():
    for t in T2:
        e = epsilon_oracle(t[:2]) * epsilon_oracle(t[2:])
        assert eps2_product_delta(*t) == e
        assert eps2_product_closed(*t) == e


def test_eps3_exhaustive():
    for t in T3:
        e = epsilon_oracle(t[:3]) * epsilon_oracle(t[3:])
        assert eps3_product_delta(*t) == e
        assert eps3_product_closed(*t) == e


def test_eps3_gamma_index_regrouping():
    # quarter of prod_p (i_{p-G(p)+2} - i_{G(p)}) (i_{p-G(p)+5} - i_{G(p)+3})
    for t in T3:
        i = (None,) + t
        prod = 1
        for p in (1, 2, 3):
            g = math.factorial(p - 1)
            prod *= (i[p - g + 2] - i[g]) * (i[p - g + 5] - i[g + 3])
        assert prod % 4 == 0 and prod // 4 == eps3_product_closed(*t)


def test_identity_domain():
    with pytest.raises(ValueError):
        eps2_product_closed(1, 2, 3, 1)
    with pytest.raises(ValueError):
        eps3_product_delta(1, 2, 3, 4, 1, 1)


def test_det_examples():
    assert det_via_epsilon(SquareMatrix.from_rows(np.eye(3, dtype=int).tolist())) == 1
    assert det_via_epsilon([[1, 0, 0], [0, 2, 0], [0, 0, 3]]) == 6


def permutation_leibniz(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = -1 if inv % 2 else 1
        for r in range(n):
            term *= m[r][perm[r]]
        total += term
    return total


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("backend", [ORACLE, RATIONAL_PRODUCT, CLOSED_FORM_LOW_DIM, STRAUB_DETERMINANT])
def test_det_random_matrices(n, backend):
    rng = random.Random(100 + n)
    for _ in range(30):
        m = random_integer_matrix(n, rng)
        expected = permutation_leibniz(m.entries)
        assert expected == round(np.linalg.det(np.array(m.entries, dtype=float)))
        assert det_via_epsilon(m, backend) == expected
        assert det_via_epsilon(m, backend, permutations_only=True) == expected


def test_three_dim_analytic_sum():
    # half the sum of (j-i)(k-i)(k-j) x1i x2j x3k
    rng = random.Random(5)
    m = random_integer_matrix(3, rng).entries
    total = sum((j - i) * (k - i) * (k - j) * m[0][i - 1] * m[1][j - 1] * m[2][k - 1]
                for i, j, k in itertools.product((1, 2, 3), repeat=3))
    assert total % 2 == 0
    assert total // 2 == permutation_leibniz(m)


def test_square_matrix_validation():
    with pytest.raises(ValueError):
        SquareMatrix(2, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        det_via_epsilon([[1]])


def test_check_determinants_all_pass():
    results = check_determinants(seed=1, count=20)
    assert len(results) == 9
    assert all(r.passed for r in results)


def test_identity_suite():
    results = run_identity_suite(seed=0, count=10)
    names = [r.name for r in results]
    assert names[:4] == ["eps2-delta-vs-oracle", "eps2-closed-vs-delta",
                         "eps3-delta-vs-oracle", "eps3-closed-vs-delta"]
    assert all(r.passed for r in results)
    assert results[2].cases == 729
