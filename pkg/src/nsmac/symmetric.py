"""Symmetric Macdonald polynomials obtained from the non-symmetric theory.

``D_mu`` is the transformed H~_lambda, ``J_lambda`` the integral form and
``P_lambda`` the monic form; each comes with the independent route it is
checked against.
"""
from __future__ import annotations

from collections import defaultdict

from .exactalg import QTPoly, QTRational, XPolynomial
from .fillings import enumerate_fillings, plain_stats
from .macdonald import (
    E_combinatorial,
    E_integral,
    E_inverted,
    RouteMismatchError,
    hook,
    hook_product,
    key_polynomial,
)
from .shapes import arm_table, as_composition, rearrangements

__all__ = [
    "as_partition",
    "n_lambda",
    "bridging_constant",
    "D_mu",
    "J_lambda",
    "J_via_stable_limit",
    "P_lambda",
    "P_via_stable_limit",
    "P_via_symmetrization",
    "schur_via_keys",
    "schur_oracle",
    "semistandard_tableaux",
    "is_symmetric",
]


def as_partition(parts):
    lam = as_composition(parts)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam


def n_lambda(lam):
    lam = sorted(lam, reverse=True)
    return sum(i * p for i, p in enumerate(lam))


def bridging_constant(mu):
    """sum of a(u) over dg'(mu) minus #{i < j : mu_i > mu_j}."""
    mu = tuple(mu)
    arms = sum(a for a, _ in arm_table(mu).values())
    n = len(mu)
    return arms - sum(1 for i in range(n) for j in range(i + 1, n) if mu[i] > mu[j])


def is_symmetric(f):
    """Invariant under every adjacent transposition of variables."""
    for i in range(f.n - 1):
        perm = list(range(f.n))
        perm[i], perm[i + 1] = i + 1, i
        if f.permute(perm) != f:
            return False
    return True


def D_mu(mu, m):
    """Sum over all fillings dg'(mu) -> [m] of x^sigma q^maj t^inv (unaugmented)."""
    mu = as_composition(mu)
    if m < 1:
        raise ValueError("alphabet size must be positive")
    buckets = defaultdict(lambda: defaultdict(int))
    for sigma in enumerate_fillings(mu, alphabet=m, augmented=False, non_attacking=False):
        st = plain_stats(sigma, m)
        buckets[sigma.x_exponent(m)][(st.maj, st.inv)] += 1
    terms = {}
    for exps, bucket in buckets.items():
        c = sum((QTRational.qt_power(a, b) * k for (a, b), k in bucket.items()), QTRational.coerce(0))
        terms[exps] = c
    return XPolynomial(m, terms)


def J_lambda(lam, m, mu=None):
    """Integral form J_lambda(x_1..x_m) as a sum over unaugmented non-attacking fillings.

    ``mu`` is the rearrangement of ``lam`` whose diagram is used (``lam``
    itself by default); the result does not depend on it.
    """
    lam = as_composition(lam)
    mu = lam if mu is None else as_composition(mu)
    if sorted(mu) != sorted(lam):
        raise ValueError(f"{mu} is not a rearrangement of {lam}")
    nl = n_lambda(lam)
    one_minus_t = hook(0, 1)
    terms = defaultdict(lambda: QTRational.coerce(0))
    for sigma in enumerate_fillings(mu, alphabet=m, augmented=False):
        lay = sigma.layout
        vals = sigma.values
        st = plain_stats(sigma)
        w = QTPoly.const(1)
        for p in range(len(lay)):
            b = lay.below[p]
            if b >= 0 and vals[p] == vals[b]:
                w = w * hook(lay.leg[p] + 1, lay.arm[p] + 1)
            else:
                w = w * one_minus_t
        exps = sigma.x_exponent(m)
        terms[exps] = terms[exps] + QTRational.qt_power(st.maj, nl - st.inv) * w
    return XPolynomial(m, dict(terms))


def _check_rearrangement(lam, mu):
    if sorted(lam) != sorted(mu):
        raise ValueError(f"{mu} is not a rearrangement of {lam}")


def J_via_stable_limit(lam, mu, m, check=True):
    """Integral form E_(0^m; mu) with x_{m+1}, ... set to zero."""
    lam, mu = as_composition(lam), as_composition(mu)
    _check_rearrangement(lam, mu)
    return E_integral((0,) * m + mu, check=check).truncate(m)


def P_via_stable_limit(lam, m, mu=None):
    """Monic P_lambda(x_1..x_m) from the truncated E_(0^m; mu) and a hook ratio."""
    lam = as_composition(lam)
    mu = lam if mu is None else as_composition(mu)
    _check_rearrangement(lam, mu)
    lam_inc = tuple(sorted(lam))
    ratio = QTRational(hook_product(mu), hook_product(lam_inc, leg_shift=0, arm_shift=1))
    return E_combinatorial((0,) * m + mu).truncate(m).scale(ratio)


def P_via_symmetrization(lam, check=True):
    """Monic P_lambda in n = len(lambda) variables from the inverted E_mu."""
    lam = as_composition(lam)
    lam_inc = tuple(sorted(lam))
    total = XPolynomial(len(lam))
    for mu in rearrangements(lam):
        total = total + E_inverted(mu, check=check).scale(
            QTRational(QTPoly.const(1), hook_product(mu, leg_shift=1, arm_shift=0))
        )
    return total.scale(hook_product(lam_inc, leg_shift=1, arm_shift=0))


def P_lambda(lam, m=None, route="both"):
    """Monic symmetric Macdonald polynomial.

    ``route`` is ``"A"`` (stable limit), ``"B"`` (symmetrization) or
    ``"both"``, which computes the two and insists they agree.
    """
    lam = as_composition(lam)
    if m is None:
        m = len(lam)
    if route == "A":
        return P_via_stable_limit(lam, m)
    if route == "B":
        if m != len(lam):
            raise ValueError("the symmetrization route works in len(lambda) variables")
        return P_via_symmetrization(lam)
    if route != "both":
        raise ValueError(f"unknown route {route!r}")
    a = P_via_stable_limit(lam, m)
    if m == len(lam):
        b = P_via_symmetrization(lam)
        if a != b:
            raise RouteMismatchError(f"P_lambda routes disagree for lambda={lam}")
    return a


def schur_via_keys(lam, n=None):
    """Sum of key polynomials over the distinct rearrangements of lambda."""
    lam = as_composition(lam)
    if n is not None and n != len(lam):
        lam = tuple(lam) + (0,) * (n - len(lam))
    total = XPolynomial(len(lam))
    for mu in rearrangements(lam):
        total = total + key_polynomial(mu)
    return total


def semistandard_tableaux(shape, n):
    """Yield SSYT of the given partition shape with entries in [n], as row lists."""
    shape = [p for p in shape if p > 0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def fill(k):
        if k == len(cells):
            yield [list(row) for row in grid]
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            grid[r][c] = v
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


def schur_oracle(lam, n):
    """s_lambda(x_1..x_n) as the content generating function of SSYT."""
    terms = defaultdict(int)
    for tab in semistandard_tableaux(lam, n):
        e = [0] * n
        for row in tab:
            for v in row:
                e[v - 1] += 1
        terms[tuple(e)] += 1
    return XPolynomial(n, {k: v for k, v in terms.items()}) if terms else XPolynomial(n)
