"""
Products of two symbols and determinants
========================================

Two epsilons multiply into a determinant of Kronecker deltas, and a
determinant of any square matrix is a sum weighted by epsilon.
"""

import random

from levicivita.backends import CLOSED_FORM_LOW_DIM, RATIONAL_PRODUCT, bareiss_determinant
from levicivita.identities import (
    det_via_epsilon,
    eps3_product_closed,
    eps3_product_delta,
    random_integer_matrix,
    run_identity_suite,
)

print(eps3_product_delta(1, 2, 3, 2, 3, 1), eps3_product_closed(1, 2, 3, 2, 3, 1))

rng = random.Random(3)
m = random_integer_matrix(4, rng)
for row in m.entries:
    print(row)
# the full n**n sum, the permutation-only sum and fraction-free elimination
print(det_via_epsilon(m, RATIONAL_PRODUCT), det_via_epsilon(m, CLOSED_FORM_LOW_DIM, permutations_only=True),
      bareiss_determinant(m.entries))

# %%
for r in run_identity_suite(seed=0, count=20):
    print("PASS" if r.passed else "FAIL", r.name, r.cases)
