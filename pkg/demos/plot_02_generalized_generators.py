"""
Swapping the differences for function values
============================================

Replacing every index ``i`` by ``G(i*lam)`` leaves the ratio intact as long as
G takes distinct values on lam, 2*lam, ..., N*lam. Cosines, Bessel J0,
shifted gamma and orthogonal polynomials all qualify for suitable lam.
"""

import math

from levicivita.backends import (
    PRESETS,
    GeneratorKind,
    GeneratorSpec,
    generalized,
    generator_validity,
    generator_values,
    random_generator,
)

t = (2, 4, 1, 3, 5)
for name, gen in PRESETS.items():
    if generator_validity(gen, 5):
        sign, diag = generalized(t, gen)
        print(f"{name:16s} sign={sign:+d}  deviation={diag.deviation:.1e}")
    else:
        print(f"{name:16s} not usable at N=5")

# %%
# Why cos(pi/4 * i) fails at N=5: two of the points coincide
print([round(v.real, 6) for v in generator_values(GeneratorSpec(GeneratorKind.COSINE, math.pi / 4), 5)])

# a random complex lam works with probability one
gen = random_generator(GeneratorKind.IDENTITY, 5, seed=1)
print(gen.label, generalized(t, gen)[0])
