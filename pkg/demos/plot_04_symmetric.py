"""
Symmetric Macdonald polynomials
===============================

Sums over fillings of a rearranged diagram give the transformed H~_lambda
(``D_mu``) and the integral form J_lambda.  The monic P_lambda comes from
the non-symmetric polynomials in two different ways.
"""

from nsmac.shapes import rearrangements
from nsmac.symmetric import (
    D_mu,
    J_lambda,
    J_via_stable_limit,
    P_via_stable_limit,
    P_via_symmetrization,
    schur_oracle,
    schur_via_keys,
)

lam = (2, 1, 0)

# D_mu does not depend on which rearrangement of lambda we start from.
values = {mu: D_mu(mu, 2) for mu in rearrangements(lam)}
print("D_mu equal over rearrangements:", len(set(values.values())) == 1)

# J_lambda directly, and as a truncated integral-form E.
print("J(1,0) in 2 variables:", J_lambda((1, 0), 2))
print("stable limit agrees:", J_via_stable_limit((2, 1), (1, 2), 2) == J_lambda((2, 1), 2))

# P_lambda: truncation of E_(0^m; mu) against symmetrization of inverted E_mu.
a = P_via_stable_limit((2, 0, 0), 3)
b = P_via_symmetrization((2, 0, 0))
print("P(2) routes agree:", a == b)
print("P(2) =", b)

# Letting q, t -> infinity leaves key polynomials, whose orbit sums are Schur.
print("s(2,1) via keys == SSYT count:", schur_via_keys(lam) == schur_oracle(lam, 3))
