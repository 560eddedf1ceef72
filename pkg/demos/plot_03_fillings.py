"""
Fillings and their statistics
=============================

A filling assigns a value in [n] to each box of the column diagram of mu.
Below the diagram sits a basement row holding 1, ..., n.  Here we look at
one non-attacking filling of mu = (2, 1, 3, 0, 0, 2).
"""

from nsmac.fillings import (
    Filling,
    coinversion_by_orientation,
    count_coinversion_triples,
    enumerate_non_attacking,
    is_non_attacking,
    stats,
)
from nsmac.shapes import arm_table, enumerate_triples

mu = (2, 1, 3, 0, 0, 2)
# rows are listed bottom row first, left to right
sigma = Filling.from_rows(mu, [[1, 2, 3, 5], [6, 4, 5], [2]])
print("non-attacking:", is_non_attacking(sigma))

st = stats(sigma)
print(f"maj={st.maj}  |Inv|={st.inv_count}  inv={st.inv}  coinv={st.coinv}")
print("descents:", sorted(st.descents))

# Arm lengths, box by box; their sum is the number of triples.
for (i, j), (a, l) in sorted(arm_table(mu).items(), key=lambda kv: (-kv[0][1], kv[0][0])):
    print(f"  box ({i},{j}): a={a} l={l}")
print("triples:", len(enumerate_triples(mu)))

# Co-inversion triples are the ones whose values run cyclically upward.
for tr in enumerate_triples(mu):
    if coinversion_by_orientation(sigma, tr):
        vals = [sigma.value(b) for b in (tr.u, tr.v, tr.w)]
        print("co-inversion", tr.kind.name, dict(zip("uvw", vals)))
print("counted by definition:", count_coinversion_triples(sigma))

# How many non-attacking fillings does a small shape have?
for m in [(0, 1, 0), (0, 2, 0), (1, 0, 2)]:
    print(m, sum(1 for _ in enumerate_non_attacking(m)))
