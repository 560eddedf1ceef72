"""Combinatorial formulas for non-symmetric Macdonald polynomials.

Every engine here sums over non-attacking fillings of the augmented column
diagram.  ``E_integral`` and ``E_inverted`` have a second, independent
route; with ``check=True`` both routes are computed and compared.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .exactalg import ONE, QTPoly, QTRational, XPolynomial, hook_fraction_sum, qt_invert_params, x_substitute
from .fillings import enumerate_non_attacking, layout, stats
from .shapes import as_composition, hook_factor_exponents

__all__ = [
    "RouteMismatchError",
    "hook",
    "hook_product",
    "E_combinatorial",
    "E_integral",
    "E_inverted",
    "key_polynomial",
    "check_complement_identity",
    "complement_composition",
]


class RouteMismatchError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@lru_cache(maxsize=None)
def hook(a, b):
    """The binomial 1 - q^a t^b."""
    return QTPoly({(0, 0): 1}) - QTPoly.monomial(a, b)


_ONE_MINUS_T = hook(0, 1)


def hook_product(mu, leg_shift=1, arm_shift=1):
    """prod over dg'(mu) of (1 - q^(l(u)+leg_shift) t^(a(u)+arm_shift))."""
    out = QTPoly.const(1)
    for a, b in hook_factor_exponents(tuple(mu), arm_shift=arm_shift, leg_shift=leg_shift):
        out = out * hook(a, b)
    return out


def _filling_data(sigma):
    """(x exponent, stats, sorted hook exponents of boxes whose value differs from below)."""
    lay = sigma.layout
    vals = sigma.values
    differ = []
    for p in range(len(lay)):
        b = lay.below[p]
        w = vals[b] if b >= 0 else lay.col[p]
        if vals[p] != w:
            differ.append((lay.leg[p] + 1, lay.arm[p] + 1))
    return sigma.x_exponent(), stats(sigma), tuple(sorted(differ))


def _grouped_sum(mu, prefix=(), inverted=False):
    """Group filling weights by (monomial, differing-box hook factors).

    Each group carries an integer polynomial sum of q^maj t^coinv (or the
    primed statistics); the rational factors are applied once per group.
    """
    groups = defaultdict(dict)
    for sigma in enumerate_non_attacking(mu, prefix=prefix):
        exps, st, differ = _filling_data(sigma)
        key = (st.maj_prime, st.coinv_prime) if inverted else (st.maj, st.coinv)
        bucket = groups[(exps, differ)]
        bucket[key] = bucket.get(key, 0) + 1
    return dict(groups)


def _groups(mu, jobs=1, inverted=False):
    if jobs <= 1 or sum(mu) == 0:
        return _grouped_sum(mu, inverted=inverted)
    lay = layout(mu)
    first_choices = range(1, min(lay.n, lay.col[0]) + 1) if lay.row[0] == 1 else range(1, lay.n + 1)
    merged = defaultdict(dict)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_grouped_sum, [mu] * len(first_choices),
                         [(v,) for v in first_choices], [inverted] * len(first_choices))
        for part in parts:
            for key, bucket in part.items():
                tgt = merged[key]
                for k, c in bucket.items():
                    tgt[k] = tgt.get(k, 0) + c
    return dict(merged)


def _assemble(n, groups):
    per_monomial = defaultdict(list)
    for (exps, differ), bucket in groups.items():
        num = QTPoly(bucket) * (_ONE_MINUS_T ** len(differ))
        per_monomial[exps].append((num, differ))
    terms = {exps: hook_fraction_sum(items) for exps, items in per_monomial.items()}
    return XPolynomial(n, terms)


@lru_cache(maxsize=None)
def _E_combinatorial(mu):
    return _assemble(len(mu), _grouped_sum(mu))


def E_combinatorial(mu, jobs=1):
    """E_mu(x; q, t) from the sum over non-attacking fillings."""
    mu = as_composition(mu)
    if jobs > 1:
        return _assemble(len(mu), _groups(mu, jobs))
    return _E_combinatorial(mu)


@lru_cache(maxsize=None)
def _E_integral_direct(mu):
    terms = defaultdict(lambda: QTPoly.const(0))
    for sigma in enumerate_non_attacking(mu):
        lay = sigma.layout
        vals = sigma.values
        st = stats(sigma)
        w = QTPoly.monomial(st.maj, st.coinv)
        for p in range(len(lay)):
            b = lay.below[p]
            below = vals[b] if b >= 0 else lay.col[p]
            w = w * (hook(lay.leg[p] + 1, lay.arm[p] + 1) if vals[p] == below else _ONE_MINUS_T)
        exps = sigma.x_exponent()
        terms[exps] = terms[exps] + w
    return XPolynomial(len(mu), {k: QTRational.coerce(v) for k, v in terms.items()})


def E_integral(mu, check=True):
    """Integral form: E_mu scaled by prod (1 - q^(l+1) t^(a+1)).

    The direct filling sum is the primary route; with ``check`` it is
    compared against hook product times ``E_combinatorial``.
    """
    mu = as_composition(mu)
    direct = _E_integral_direct(mu)
    if check:
        scaled = E_combinatorial(mu).scale(hook_product(mu))
        if scaled != direct:
            raise RouteMismatchError(f"integral form routes disagree for mu={mu}")
    return direct


@lru_cache(maxsize=None)
def _E_inverted_direct(mu):
    return _assemble(len(mu), _grouped_sum(mu, inverted=True))


def E_inverted(mu, check=True):
    """E_mu(x; 1/q, 1/t) from the primed statistics maj' and coinv'."""
    mu = as_composition(mu)
    direct = _E_inverted_direct(mu)
    if check and qt_invert_params(E_combinatorial(mu)) != direct:
        raise RouteMismatchError(f"inverted routes disagree for mu={mu}")
    return direct


@lru_cache(maxsize=None)
def key_polynomial(mu):
    """E_mu(x; inf, inf): the fillings with maj' = coinv' = 0, weight x^sigma."""
    mu = as_composition(mu)
    terms = defaultdict(int)
    for sigma in enumerate_non_attacking(mu):
        st = stats(sigma)
        if st.maj_prime == 0 and st.coinv_prime == 0:
            terms[sigma.x_exponent()] += 1
    return XPolynomial(len(mu), {k: QTRational.coerce(v) for k, v in terms.items()})


def complement_composition(nu, r):
    """(r, ..., r) - (nu_n, ..., nu_1)."""
    if r < max(nu):
        raise ValueError(f"r={r} is smaller than max(nu)={max(nu)}")
    return tuple(r - p for p in reversed(nu))


def check_complement_identity(nu, r, engine=None):
    """Compare E_mu(x) with (x_1...x_n)^r E_nu(1/x_n, ..., 1/x_1)."""
    nu = as_composition(nu)
    mu = complement_composition(nu, r)
    engine = engine or E_combinatorial
    n = len(nu)
    images = []
    for i in range(n):
        e = [0] * n
        e[n - 1 - i] = -1
        images.append((ONE, tuple(e)))
    rhs = x_substitute(engine(nu), images).shift_monomial((r,) * n)
    return engine(mu) == rhs
