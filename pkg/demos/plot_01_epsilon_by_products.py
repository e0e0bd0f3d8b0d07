"""
Epsilon as a product of differences
===================================

The symbol can be read off a permutation by counting inversions, but it is
also a plain product of index differences, normalized so that 1,2,...,N maps
to +1.
"""

from math import factorial

from levicivita import epsilon_oracle, sgn_product
from levicivita.backends import rational_product, straub_determinant, straub_matrix, superfactorial_denominator

# three ways to get the same sign
for t in [(1, 2, 3), (2, 3, 1), (3, 2, 1), (1, 1, 3)]:
    print(t, epsilon_oracle(t), sgn_product(t), rational_product(t), straub_determinant(t))

# the normalizer is a product of factorials: 1, 2, 12, 288, ...
print([superfactorial_denominator(n) for n in range(2, 8)])
print(all(superfactorial_denominator(n) == superfactorial_denominator(n - 1) * factorial(n - 1)
          for n in range(3, 10)))

# %%
# The numerator grows fast but stays an exact integer, so large N is fine
t = tuple(range(12, 0, -1))
print(rational_product(t), epsilon_oracle(t))

# the determinant form is a permuted identity matrix
for row in straub_matrix((3, 1, 2)):
    print(row)
