"""
Two ways to compute E_mu
========================

The filling formula sums over non-attacking fillings of the column
diagram.  The recurrence starts at E_0 = 1 and applies the cyclic shift
Psi and Hecke intertwiners.  Neither uses the other, so agreement is a
strong check.
"""
import time

from nsmac.hecke import E_recurrence
from nsmac.macdonald import E_combinatorial
from nsmac.shapes import compositions, pi_unshift, s_i

# Trace the recurrence path for one composition.
mu = (0, 2, 1)
path = [mu]
while any(mu):
    if mu[0] > 0:
        mu = pi_unshift(mu)
    else:
        i = next(k for k in range(1, len(mu)) if mu[k - 1] == 0 and mu[k] > 0)
        mu = s_i(mu, i)
    path.append(mu)
print(" <- ".join(str(m) for m in path))

# Compare the engines on every composition of 4 into 3 parts.
for engine in (E_combinatorial, E_recurrence):
    start = time.perf_counter()
    values = {mu: engine(mu) for mu in compositions(3, 4)}
    print(f"{engine.__name__:16s} {len(values)} polynomials in {time.perf_counter() - start:.3f}s")

agree = all(E_combinatorial(mu) == E_recurrence(mu) for mu in compositions(3, 4))
print("engines agree:", agree)
