"""Cherednik's representation of the affine Hecke algebra on Q(q,t)[x^{+-1}]
and the Knop-Sahi recurrence built on it.

Operator indices run over 0..n-1; index 0 is the affine generator, for
which x^{alpha_0} = q x_n / x_1.
"""
from __future__ import annotations

from functools import lru_cache

from .exactalg import ONE, Q, QTRational, T, XPolynomial, x_substitute
from .shapes import arm_length, as_composition, leg_length, pi_unshift, s_i

__all__ = [
    "OperatorContext",
    "apply_si",
    "apply_Ti",
    "apply_Psi",
    "intertwiner_coefficient",
    "E_recurrence",
]


def _check_index(i, n):
    if not 0 <= i < n:
        raise ValueError(f"operator index {i} out of range for n={n}")
    if i == 0 and n < 2:
        raise ValueError("the affine generator needs n >= 2")


def apply_si(f, i):
    """s_i for i != 0 swaps x_i, x_{i+1}; s_0 f = f(q x_n, x_2, ..., x_{n-1}, x_1/q)."""
    n = f.n
    _check_index(i, n)
    unit = [tuple(int(k == j) for k in range(n)) for j in range(n)]
    if i == 0:
        images = [(ONE, e) for e in unit]
        images[0] = (Q, unit[n - 1])
        images[n - 1] = (Q.inverse(), unit[0])
        return x_substitute(f, images)
    perm = list(range(n))
    perm[i - 1], perm[i] = i, i - 1
    return f.permute(perm)


@lru_cache(maxsize=None)
def _root_data(i, n):
    """(exponent vector of x^{alpha_i}, its q-power)."""
    e = [0] * n
    if i == 0:
        e[n - 1], e[0] = 1, -1
        return tuple(e), 1
    e[i - 1], e[i] = 1, -1
    return tuple(e), 0


@lru_cache(maxsize=None)
def _Ti_monomial(lam, i):
    """T_i x^lam as a tuple of (exponent, coefficient) pairs."""
    n = len(lam)
    root, qpow = _root_data(i, n)
    k = lam[n - 1] - lam[0] if i == 0 else lam[i - 1] - lam[i]

    def times_root(m):
        return tuple(a + m * r for a, r in zip(lam, root)), QTRational.qt_power(m * qpow, 0)

    out = {}

    def add(exps, c):
        v = out.get(exps)
        v = c if v is None else v + c
        if v:
            out[exps] = v
        else:
            out.pop(exps, None)

    # s_i(x^lam) = x^lam * (x^alpha_i)^(-k)
    exps, c = times_root(-k)
    add(exps, T * c)
    # (x^lam - x^{s_i lam}) / (1 - x^alpha_i) as a finite geometric sum
    if k > 0:
        for m in range(1, k + 1):
            exps, c = times_root(-m)
            add(exps, -(T - 1) * c)
    elif k < 0:
        for m in range(0, -k):
            exps, c = times_root(m)
            add(exps, (T - 1) * c)
    return tuple(out.items())


def apply_Ti(f, i):
    """Cherednik's T_i, extended linearly over Q(q, t)."""
    _check_index(i, f.n)
    out = XPolynomial(f.n)
    acc = {}
    for lam, c in f.items():
        for exps, d in _Ti_monomial(lam, i):
            v = c * d
            if exps in acc:
                v = acc[exps] + v
            acc[exps] = v
    return XPolynomial(f.n, {k: v for k, v in acc.items() if v}) if acc else out


def apply_Psi(f):
    """Psi f = x_1 f(x_2, ..., x_n, x_1/q); on monomials x^lam -> q^(-lam_n) x^pi(lam)."""
    out = {}
    for lam, c in f.items():
        exps = (lam[-1] + 1,) + tuple(lam[:-1])
        out[exps] = c * QTRational.qt_power(-lam[-1], 0)
    return XPolynomial(f.n, out)


def intertwiner_coefficient(mu, i):
    """(1 - t) / (1 - q^(l(u)+1) t^a(u)) with u = (i, mu_{i+1} + 1); needs mu_i > mu_{i+1}."""
    mu = as_composition(mu)
    if not 1 <= i < len(mu):
        raise ValueError(f"index {i} out of range for n={len(mu)}")
    if mu[i - 1] <= mu[i]:
        raise ValueError(f"need mu_{i} > mu_{i + 1}, got {mu}")
    u = (i, mu[i] + 1)
    return (ONE - T) / (ONE - Q ** (leg_length(u, mu) + 1) * T ** arm_length(u, mu))


class OperatorContext:
    """Bundle of the operators for a fixed number of variables."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n

    def s(self, f, i):
        self._check(f)
        return apply_si(f, i)

    def T(self, f, i):
        self._check(f)
        return apply_Ti(f, i)

    def Psi(self, f):
        self._check(f)
        return apply_Psi(f)

    def T_word(self, f, word):
        """Apply T_{word[-1]} first, then ..., T_{word[0]} last."""
        for i in reversed(word):
            f = self.T(f, i)
        return f

    def _check(self, f):
        if f.n != self.n:
            raise ValueError(f"polynomial has {f.n} variables, context has {self.n}")


@lru_cache(maxsize=None)
def _E_recurrence(mu):
    n = len(mu)
    if not any(mu):
        return XPolynomial.constant(n)
    if mu[0] > 0:
        nu = pi_unshift(mu)
        return apply_Psi(_E_recurrence(nu)).scale(Q ** nu[-1])
    i = next(k for k in range(1, n) if mu[k - 1] == 0 and mu[k] > 0)
    nu = s_i(mu, i)
    e = _E_recurrence(nu)
    return apply_Ti(e, i) + e.scale(intertwiner_coefficient(nu, i))


def E_recurrence(mu):
    """E_mu from E_0 = 1 via the cyclic shift and the intertwiner step."""
    return _E_recurrence(as_composition(mu))
