"""Exact arithmetic over Q(q, t) and Laurent polynomials in x_1..x_n.

Three value types live here:

``QTPoly``
    sparse polynomial in q, t with arbitrary-precision integer coefficients,
``QTRational``
    reduced fraction of two ``QTPoly``,
``XPolynomial``
    sparse Laurent polynomial in x_1..x_n with ``QTRational`` coefficients.

All values are immutable; operators return new objects.  GCDs are computed
by content extraction plus a primitive remainder sequence, viewing a
bivariate polynomial as a polynomial in q with coefficients in Z[t].
"""
from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd as igcd

__all__ = [
    "QTPoly",
    "QTRational",
    "XPolynomial",
    "EvaluationPoleError",
    "qt_normalize",
    "qt_evaluate",
    "qt_invert_params",
    "hook_fraction_sum",
    "x_multiply",
    "x_substitute",
    "Q",
    "T",
    "ONE",
    "ZERO",
]


class EvaluationPoleError(ZeroDivisionError):
    """Raised when a denominator vanishes at the requested evaluation point."""


# ---------------------------------------------------------------------------
# Dense univariate helpers over Z.  Polynomials are lists, low degree first,
# with no trailing zeros; the zero polynomial is [].

def _strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_content(a):
    return reduce(igcd, a, 0)


def _z_scale(a, c):
    return [c * x for x in a] if c else []


def _z_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _z_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _strip(out)


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _z_divexact(a, b):
    """Quotient a / b in Z[t]; b must divide a exactly."""
    if not a:
        return []
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact division in Z[t]")
        quo[k - db] = qc
        for j in range(db + 1):
            a[k - db + j] -= qc * b[j]
    if any(a):
        raise ArithmeticError("inexact division in Z[t]")
    return _strip(quo)


def _z_prem(a, b):
    """Pseudo-remainder of a by b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        _strip(r)
    return r


def _z_primitive(a):
    c = _z_content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _z_gcd(a, b):
    if not a or not b:
        x = a or b
        return _z_scale(_z_primitive(x), _z_content(x))
    c = igcd(_z_content(a), _z_content(b))
    a, b = _z_primitive(a), _z_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [c]
        r = _z_prem(a, b)
        a, b = b, _z_primitive(r)
    return _z_scale(a, c)


# ---------------------------------------------------------------------------
# Dense recursive representation for Z[t][q]: list (indexed by q-degree) of
# Z[t] lists.

def _to_rec(terms):
    dq = max(eq for eq, _ in terms)
    rows = [[] for _ in range(dq + 1)]
    for (eq, et), c in terms.items():
        row = rows[eq]
        if len(row) <= et:
            row.extend([0] * (et + 1 - len(row)))
        row[et] = c
    return [_strip(r) for r in rows]


def _from_rec(rows):
    return {(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row) if c}


def _r_strip(a):
    while a and not a[-1]:
        a.pop()
    return a


def _r_content(a):
    g = []
    for row in a:
        if row:
            g = _z_gcd(g, row)
            if len(g) == 1 and abs(g[0]) == 1:
                return [1]
    return g


def _r_prem(a, b):
    r = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [_z_mul(lb, x) for x in r]
        for j in range(db + 1):
            r[shift + j] = _z_sub(r[shift + j], _z_mul(lr, b[j]))
        _r_strip(r)
    return r


def _r_primitive(a):
    c = _r_content(a)
    if c == [1]:
        return a
    return [_z_divexact(row, c) for row in a]


def _r_gcd(a, b):
    ca, cb = _r_content(a), _r_content(b)
    c = _z_gcd(ca, cb)
    a = [_z_divexact(row, ca) for row in a]
    b = [_z_divexact(row, cb) for row in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [c]
        r = _r_prem(a, b)
        a, b = b, (_r_primitive(r) if r else [])
    return [_z_mul(c, row) for row in a]


def _r_divexact(a, b):
    a = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    quo = [[] for _ in range(len(a) - db)]
    for k in range(len(a) - 1, db - 1, -1):
        if not a[k]:
            continue
        qc = _z_divexact(a[k], lb)
        quo[k - db] = qc
        for j in range(db + 1):
            a[k - db + j] = _z_sub(a[k - db + j], _z_mul(qc, b[j]))
    if any(a):
        raise ArithmeticError("inexact division in Z[q,t]")
    return _r_strip(quo)


# ---------------------------------------------------------------------------

class QTPoly:
    """Sparse polynomial in q and t over the integers.

    ``terms`` maps ``(e_q, e_t)`` to a nonzero ``int``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        clean = {}
        for (eq, et), c in terms.items():
            if eq < 0 or et < 0:
                raise ValueError("negative exponent in QTPoly")
            if c:
                clean[(int(eq), int(et))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, eq, et, c=1):
        return cls({(eq, et): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {(0, 0): 1}

    def is_monomial(self):
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return QTPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QTPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QTPoly._raw({k: c * other for k, c in self._terms.items()} if other else {})
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return QTPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of QTPoly")
        out, base = QTPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, dq, dt):
        """Multiply by q^dq t^dt (exponents must stay non-negative)."""
        return QTPoly({(a + dq, b + dt): c for (a, b), c in self._terms.items()})

    def min_exponents(self):
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def max_exponents(self):
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def content(self):
        return reduce(igcd, self._terms.values(), 0)

    def leading_coefficient(self):
        """Coefficient of the lexicographically smallest (e_q, e_t) exponent."""
        return self._terms[min(self._terms)]

    def reversed(self):
        """q^A t^B P(1/q, 1/t) with (A, B) the maximal exponents."""
        if not self._terms:
            return self
        A, B = self.max_exponents()
        return QTPoly._raw({(A - a, B - b): c for (a, b), c in self._terms.items()})

    def evaluate(self, q0, t0):
        q0, t0 = Fraction(q0), Fraction(t0)
        return sum((c * q0 ** a * t0 ** b for (a, b), c in self._terms.items()), Fraction(0))

    def specialize_q(self, k):
        """Substitute q = t^k (k >= 0); the result has no q."""
        out = {}
        for (a, b), c in self._terms.items():
            key = (0, k * a + b)
            out[key] = out.get(key, 0) + c
        return QTPoly(out)

    def exact_div(self, other):
        """Quotient self / other; raises ArithmeticError if it is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            ((a0, b0), c0), = other._terms.items()
            out = {}
            for (a, b), c in self._terms.items():
                qc, r = divmod(c, c0)
                if r or a < a0 or b < b0:
                    raise ArithmeticError("inexact division in Z[q,t]")
                out[(a - a0, b - b0)] = qc
            return QTPoly._raw(out)
        return QTPoly._raw(_from_rec(_r_divexact(_to_rec(self._terms), _to_rec(other._terms))))

    def gcd(self, other):
        """GCD in Z[q,t], determined up to sign."""
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.is_monomial() or other.is_monomial():
            c = igcd(self.content(), other.content())
            a1, b1 = self.min_exponents()
            a2, b2 = other.min_exponents()
            return QTPoly._raw({(min(a1, a2), min(b1, b2)): c})
        if self == other:
            return self
        # pull out monomial factors so the remainder sequence stays short
        a1, b1 = self.min_exponents()
        a2, b2 = other.min_exponents()
        mono = (min(a1, a2), min(b1, b2))
        x = self.shift(-a1, -b1)
        y = other.shift(-a2, -b2)
        g = QTPoly._raw(_from_rec(_r_gcd(_to_rec(x._terms), _to_rec(y._terms))))
        return g.shift(*mono) if mono != (0, 0) else g

    def __repr__(self):
        return f"QTPoly({self.to_str()!r})"

    def sorted_terms(self):
        return sorted(self._terms.items())

    def to_str(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = "*".join(
                s for s in (_pow_str("q", a), _pow_str("t", b)) if s
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_str

    def to_json(self):
        return [[a, b, str(c)] for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        return cls({(int(a), int(b)): int(c) for a, b, c in data})


def _pow_str(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


_POLY_ONE = QTPoly.const(1)


class QTRational:
    """An element of Q(q, t) kept in canonical reduced form.

    Canonical form: numerator and denominator coprime in Z[q,t] (integer
    content included) and the denominator's coefficient at its
    lexicographically smallest exponent is positive.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = _POLY_ONE
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, _POLY_ONE
        elif not den.is_one():
            g = num.gcd(den)
            if not (g.is_monomial() and g._terms.get((0, 0)) in (1, -1)):
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value):
        if isinstance(value, QTRational):
            return value
        if isinstance(value, QTPoly):
            return cls._raw(value, _POLY_ONE)
        if isinstance(value, int):
            return cls._raw(QTPoly.const(value), _POLY_ONE)
        if isinstance(value, Fraction):
            return cls(QTPoly.const(value.numerator), QTPoly.const(value.denominator))
        raise TypeError(f"cannot coerce {type(value).__name__} to QTRational")

    @classmethod
    def qt_power(cls, a, b):
        """q^a t^b for any integers a, b."""
        num = QTPoly.monomial(max(a, 0), max(b, 0))
        den = QTPoly.monomial(max(-a, 0), max(-b, 0))
        return cls._raw(num, den)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            other = QTRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return QTRational._raw(-self.num, self.den)

    def __add__(self, other):
        try:
            other = QTRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return QTRational._raw(a + c, b)
        if b == d:
            return QTRational(a + c, b)
        g = b.gcd(d)
        if g.is_monomial() and g._terms.get((0, 0)) in (1, -1):
            # coprime denominators: the sum is already reduced
            return QTRational._canon_sign(a * d + b * c, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        num = a * d1 + c * b1
        if num.is_zero():
            return QTRational._raw(num, _POLY_ONE)
        g2 = num.gcd(g)
        return QTRational._canon_sign(num.exact_div(g2), b1 * d1 * g.exact_div(g2))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = QTRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QTRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return QTRational._raw(QTPoly(), _POLY_ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return QTRational._raw(a * c, b)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        return QTRational._canon_sign(
            a.exact_div(g1) * c.exact_div(g2), b.exact_div(g2) * d.exact_div(g1)
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QTRational._canon_sign(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = QTRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QTRational.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return QTRational._raw(self.num ** e, self.den ** e)

    @classmethod
    def _canon_sign(cls, num, den):
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return cls._raw(num, den)

    def evaluate(self, q0, t0):
        return qt_evaluate(self, q0, t0)

    def invert_params(self):
        """The value at (1/q, 1/t), in canonical form."""
        if self.num.is_zero():
            return self
        an, bn = self.num.max_exponents()
        ad, bd = self.den.max_exponents()
        # num(1/q,1/t)/den(1/q,1/t) = rev(num)/rev(den) * q^(ad-an) t^(bd-bn)
        num = self.num.reversed()
        den = self.den.reversed()
        dq, dt = ad - an, bd - bn
        num = num.shift(max(dq, 0), max(dt, 0))
        den = den.shift(max(-dq, 0), max(-dt, 0))
        return QTRational(num, den)

    def to_str(self):
        if self.den.is_one():
            return self.num.to_str()
        n = self.num.to_str()
        if len(self.num._terms) > 1:
            n = f"({n})"
        d = self.den.to_str()
        if len(self.den._terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    __str__ = to_str

    def __repr__(self):
        return f"QTRational({self.to_str()!r})"


def qt_normalize(num, den):
    """Reduce ``num/den`` to canonical form; raises ZeroDivisionError if den == 0."""
    return QTRational(num, den)


def qt_evaluate(r, q0, t0):
    """Exact value of ``r`` at rational (q0, t0).

    Only a pre-filter for equality testing; raises ``EvaluationPoleError``
    when the denominator vanishes so the caller can resample.
    """
    r = QTRational.coerce(r)
    d = r.den.evaluate(q0, t0)
    if d == 0:
        raise EvaluationPoleError(f"denominator vanishes at q={q0}, t={t0}")
    return r.num.evaluate(q0, t0) / d


ONE = QTRational.coerce(1)
ZERO = QTRational.coerce(0)
Q = QTRational.coerce(QTPoly.monomial(1, 0))
T = QTRational.coerce(QTPoly.monomial(0, 1))


# ---------------------------------------------------------------------------
# Sums over denominators made of binomials 1 - q^a t^b.  With g = gcd(a, b),
# 1 - q^a t^b = -prod_{d | g} Phi_d(q^(a/g) t^(b/g)), and every factor is
# irreducible in Z[q, t], so cancellation needs trial division only.

@lru_cache(maxsize=None)
def _cyclotomic(d):
    p = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            p = _z_divexact(p, list(_cyclotomic(e)))
    return tuple(p)


@lru_cache(maxsize=None)
def _binomial_factors(a, b):
    g = igcd(a, b)
    if g == 0:
        raise ZeroDivisionError("1 - q^0 t^0 is zero")
    return tuple((d, a // g, b // g) for d in range(1, g + 1) if g % d == 0)


@lru_cache(maxsize=None)
def _factor_poly(key):
    d, a, b = key
    coeffs = (1, -1) if d == 1 else _cyclotomic(d)
    return QTPoly._raw({(a * k, b * k): c for k, c in enumerate(coeffs) if c})


def hook_fraction_sum(items):
    """Canonical form of sum_i num_i / prod_j (1 - q^a_ij t^b_ij).

    ``items`` yields ``(num, hooks)`` with ``num`` a QTPoly and ``hooks`` an
    iterable of ``(a, b)`` pairs, not both zero.  Equivalent to adding the
    QTRationals one by one, without any polynomial gcd.
    """
    parts = []
    common = Counter()
    for num, hooks in items:
        if num.is_zero():
            continue
        need = Counter()
        for a, b in hooks:
            need.update(_binomial_factors(a, b))
        parts.append((num, need))
        common |= need
    total = QTPoly()
    for num, need in parts:
        for key, k in (common - need).items():
            num = num * _factor_poly(key) ** k
        total = total + num
    if total.is_zero():
        return ZERO
    den = _POLY_ONE
    for key, k in sorted(common.items()):
        f = _factor_poly(key)
        while k:
            try:
                total = total.exact_div(f)
            except ArithmeticError:
                break
            k -= 1
        if k:
            den = den * f ** k
    # every factor has constant term 1, so den is already in canonical sign
    return QTRational._raw(total, den)


# ---------------------------------------------------------------------------

class XPolynomial:
    """Laurent polynomial in x_1..x_n with coefficients in Q(q, t).

    ``terms`` maps exponent tuples of length ``n`` to nonzero
    ``QTRational`` coefficients.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("XPolynomial needs at least one variable")
        self.n = n
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise ValueError(f"monomial {exps} does not have {n} exponents")
                c = QTRational.coerce(c)
                if exps in clean:
                    c = clean[exps] + c
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, n, c=1):
        c = QTRational.coerce(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def var(cls, i, n):
        """The variable x_i (1-based) in n variables."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return set(self._terms)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), ZERO)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, QTRational, QTPoly)):
            return self == XPolynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _lift(self, other):
        if isinstance(other, XPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, QTRational, QTPoly, Fraction)):
            return XPolynomial.constant(self.n, other)
        return None

    def __neg__(self):
        return XPolynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            if k in out:
                v = out[k] + c
                if v:
                    out[k] = v
                else:
                    del out[k]
            else:
                out[k] = c
        return XPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = QTRational.coerce(c)
        if not c:
            return XPolynomial._raw(self.n, {})
        return XPolynomial._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QTRational, QTPoly, Fraction)):
            return self.scale(other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return x_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only a single term has a Laurent inverse")
            (exps, c), = self._terms.items()
            return XPolynomial(self.n, {tuple(-a for a in exps): c.inverse()}) ** (-e)
        out = XPolynomial.constant(self.n)
        for _ in range(e):
            out = out * self
        return out

    def shift_monomial(self, exps, c=ONE):
        """Multiply by c * x^exps."""
        c = QTRational.coerce(c)
        return XPolynomial._raw(
            self.n,
            {tuple(a + b for a, b in zip(k, exps)): v * c for k, v in self._terms.items()},
        )

    def map_coefficients(self, fn):
        out = {}
        for k, v in self._terms.items():
            w = fn(v)
            if w:
                out[k] = w
        return XPolynomial._raw(self.n, out)

    def truncate(self, m):
        """Set x_{m+1} = ... = x_n = 0, returning a polynomial in m variables."""
        out = {}
        for k, v in self._terms.items():
            if any(k[m:]):
                continue
            out[k[:m]] = v
        return XPolynomial._raw(m, out)

    def permute(self, perm):
        """Apply the variable substitution x_i -> x_{perm[i]} (0-based perm)."""
        out = {}
        for k, v in self._terms.items():
            e = [0] * self.n
            for i, a in enumerate(k):
                e[perm[i]] += a
            out[tuple(e)] = v
        return XPolynomial._raw(self.n, out)

    def is_polynomial_coefficients(self):
        return all(c.is_polynomial() for c in self._terms.values())

    def evaluate_params(self, q0, t0):
        """Exact coefficients at rational (q0, t0), as dict exps -> Fraction."""
        return {k: qt_evaluate(v, q0, t0) for k, v in self._terms.items()}

    # -- output ----------------------------------------------------------

    def sorted_items(self, order="display"):
        if order == "lex":
            return sorted(self._terms.items())
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def to_str(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_items():
            mono = "*".join(
                (f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}") for i, e in enumerate(exps) if e
            )
            if not mono:
                pieces.append(c.to_str())
                continue
            if c == ONE:
                pieces.append(mono)
            elif c == -ONE:
                pieces.append("-" + mono)
            else:
                cs = c.to_str()
                if c.den.is_one() and len(c.num._terms) > 1:
                    cs = f"({cs})"
                pieces.append(f"{cs}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __str__ = to_str

    def __repr__(self):
        return f"XPolynomial({self.n}, {self.to_str()!r})"

    def to_records(self):
        return [
            {"x": list(k), "num": v.num.to_json(), "den": v.den.to_json()}
            for k, v in self.sorted_items(order="lex")
        ]

    def to_json(self):
        return json.dumps(self.to_records(), separators=(",", ":"))

    @classmethod
    def from_records(cls, n, records):
        terms = {}
        for rec in records:
            num = QTPoly.from_json(rec["num"])
            den = QTPoly.from_json(rec["den"])
            terms[tuple(rec["x"])] = QTRational(num, den)
        return cls(n, terms)

    @classmethod
    def from_json(cls, n, text):
        return cls.from_records(n, json.loads(text))


def x_multiply(f, g):
    """Ring product of two XPolynomials in the same variables."""
    f._check(g)
    out = {}
    for k1, c1 in f._terms.items():
        for k2, c2 in g._terms.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            v = c1 * c2
            if k in out:
                v = out[k] + v
                if v:
                    out[k] = v
                else:
                    del out[k]
            else:
                out[k] = v
    return XPolynomial._raw(f.n, out)


def x_substitute(f, images):
    """Apply the homomorphism x_i -> images[i].

    Each image is a pair ``(coefficient, exponent tuple)`` describing a single
    term c * x^e; the target ring has ``len(e)`` variables.
    """
    if len(images) != f.n:
        raise ValueError(f"expected {f.n} images, got {len(images)}")
    coeffs = [QTRational.coerce(c) for c, _ in images]
    exps = [tuple(e) for _, e in images]
    m = len(exps[0]) if exps else f.n
    out = {}
    for k, v in f._terms.items():
        e = [0] * m
        c = v
        for i, a in enumerate(k):
            if a:
                for j, b in enumerate(exps[i]):
                    e[j] += a * b
                if coeffs[i] != ONE:
                    c = c * coeffs[i] ** a
        key = tuple(e)
        if key in out:
            c = out[key] + c
            if c:
                out[key] = c
            else:
                del out[key]
        elif c:
            out[key] = c
    return XPolynomial._raw(m, out)


def qt_invert_params(f):
    """Apply q -> 1/q, t -> 1/t to every coefficient of ``f``."""
    if isinstance(f, QTRational):
        return f.invert_params()
    return f.map_coefficients(QTRational.invert_params)
