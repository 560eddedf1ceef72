"""
Hecke operators on Laurent polynomials
======================================

T_i acts on Q(q,t)[x^{+-1}] by Demazure-Lusztig operators; i = 0 uses the
affine root q x_n / x_1.  We check the defining relations on a random
polynomial and show what T_i does to a few monomials.
"""
import random

from nsmac.exactalg import T, XPolynomial
from nsmac.hecke import apply_Psi, apply_si, apply_Ti
from nsmac.verify import random_xpolynomial

n = 3
x1, x2, x3 = (XPolynomial.var(i, n) for i in (1, 2, 3))
print("T1(x2) =", apply_Ti(x2, 1))
print("s0(x1) =", apply_si(x1, 0))
print("Psi(x3) =", apply_Psi(x3))

f = random_xpolynomial(random.Random(0), n)
print("f =", f)
for i in range(n):
    tf = apply_Ti(f, i)
    ok = apply_Ti(tf, i) == tf.scale(T - 1) + f.scale(T)
    print(f"(T{i} - t)(T{i} + 1) f == 0: {ok}")

lhs = apply_Ti(apply_Ti(apply_Ti(f, 0), 1), 0)
rhs = apply_Ti(apply_Ti(apply_Ti(f, 1), 0), 1)
print("T0 T1 T0 == T1 T0 T1:", lhs == rhs)
