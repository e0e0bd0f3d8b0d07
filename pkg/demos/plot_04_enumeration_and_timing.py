"""
Sweeping every index tuple
==========================

Out of N**N tuples exactly N! are nonzero. The sweep below checks that for
each backend and then times a few of them.
"""

from math import factorial

from levicivita.backends import ORACLE, RATIONAL_PRODUCT, STRAUB_DETERMINANT, all_backends
from levicivita.bench import BenchConfig, run_bench, to_csv
from levicivita.enumeration import enumerate_all, verify_backend

for n in range(2, 7):
    r = enumerate_all(n, RATIONAL_PRODUCT)
    print(n, r.count_plus, r.count_minus, r.count_zero, r.count_plus + r.count_minus == factorial(n))

# every backend that works at N=4, compared with the oracle
bad = [b.name for b in all_backends(4) if not verify_backend(4, b).ok]
print("disagreeing backends:", bad)

# the nonzero part of the N=3 table
for t, s in enumerate_all(3, ORACLE, list_nonzero=True).nonzero:
    print(t, f"{s:+d}")

# %%
# Timings depend on the machine; they are only reported
print(to_csv(run_bench(BenchConfig(3, 5, (ORACLE, RATIONAL_PRODUCT, STRAUB_DETERMINANT), repetitions=2))))
