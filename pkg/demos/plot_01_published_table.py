"""
The n = 3 table
===============

Compute E_mu(x; q, t) for every mu in N^3 with |mu| <= 2 and compare each
one with the values printed in the literature, transcribed in
``nsmac.appendix``.
"""

from nsmac.appendix import appendix_table
from nsmac.cli import table_order
from nsmac.macdonald import E_combinatorial
from nsmac.render import latex_xpolynomial

published = appendix_table()

# The table is ordered by degree, then by shape, then decreasing lexicographically.
for mu in table_order(3, 2):
    e = E_combinatorial(mu)
    if mu in published:
        status = "matches" if e == published[mu] else "DIFFERS"
    else:
        status = "not in the printed table"
    print(f"E{mu}: {status}")
    print("   ", e)

# The same values as LaTeX, with 1 - q^a t^b factors kept intact.
mu = (0, 2, 0)
print()
print(latex_xpolynomial(E_combinatorial(mu), lead=mu))
