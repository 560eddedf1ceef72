"""Compositions and their diagrams.

A box is a ``(col, row)`` pair with 1-based columns; row 0 is the basement
row of the augmented diagram.  Compositions are plain tuples of
non-negative ints.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations

__all__ = [
    "Composition",
    "TripleKind",
    "Triple",
    "as_composition",
    "parse_composition",
    "format_composition",
    "column_diagram",
    "augmented_diagram",
    "reading_key",
    "reading_order",
    "reading_less",
    "leg",
    "leg_length",
    "arm_left",
    "arm_right",
    "arm",
    "arm_length",
    "arm_table",
    "hook_factor_exponents",
    "attacks",
    "attacking_pairs",
    "below",
    "enumerate_triples",
    "bruhat_lower_set",
    "bruhat_leq",
    "pi_shift",
    "pi_unshift",
    "s_i",
    "pi_box",
    "rearrangements",
    "compositions",
]

Composition = tuple


def _as_part(p):
    v = int(p)
    if not isinstance(p, str) and v != p:
        raise ValueError(f"part {p!r} is not an integer")
    return v


def as_composition(parts):
    mu = tuple(_as_part(p) for p in parts)
    if not mu:
        raise ValueError("a composition needs at least one part")
    if any(p < 0 for p in mu):
        raise ValueError(f"negative part in {mu}")
    return mu


def parse_composition(text):
    """Parse ``"2,1,3,0,0,2"`` into ``(2, 1, 3, 0, 0, 2)``."""
    try:
        return as_composition(int(s) for s in text.replace(" ", "").strip("()[]").split(","))
    except ValueError as exc:
        raise ValueError(f"not a composition: {text!r} ({exc})") from None


def format_composition(mu):
    return ",".join(str(p) for p in mu)


def column_diagram(mu):
    """dg'(mu): boxes (i, j) with 1 <= j <= mu_i."""
    return {(i, j) for i, m in enumerate(mu, 1) for j in range(1, m + 1)}


def augmented_diagram(mu):
    return column_diagram(mu) | {(i, 0) for i in range(1, len(mu) + 1)}


def reading_key(box):
    """Sort key for reading order: rows top to bottom, right to left."""
    return (-box[1], -box[0])


def reading_order(boxes):
    return sorted(boxes, key=reading_key)


def reading_less(u, v):
    return reading_key(u) < reading_key(v)


def below(u):
    return (u[0], u[1] - 1)


def _check_box(u, mu):
    i, j = u
    if not (1 <= i <= len(mu) and 1 <= j <= mu[i - 1]):
        raise ValueError(f"box {u} is not in the diagram of {mu}")


def leg(u, mu):
    _check_box(u, mu)
    i, j = u
    return {(i, jj) for jj in range(j + 1, mu[i - 1] + 1)}


def leg_length(u, mu):
    _check_box(u, mu)
    return mu[u[0] - 1] - u[1]


def arm_left(u, mu):
    _check_box(u, mu)
    i, j = u
    return {(k, j) for k in range(1, i) if mu[k - 1] <= mu[i - 1] and j <= mu[k - 1]}


def arm_right(u, mu):
    _check_box(u, mu)
    i, j = u
    # (k, j-1) lies in the augmented diagram iff j-1 <= mu_k (row 0 always)
    return {(k, j - 1) for k in range(i + 1, len(mu) + 1) if mu[k - 1] < mu[i - 1] and j - 1 <= mu[k - 1]}


def arm(u, mu):
    return arm_left(u, mu) | arm_right(u, mu)


def arm_length(u, mu):
    return len(arm(u, mu))


@lru_cache(maxsize=None)
def arm_table(mu):
    """Map each box of dg'(mu) to its (arm length, leg length)."""
    return {u: (arm_length(u, mu), leg_length(u, mu)) for u in column_diagram(mu)}


def hook_factor_exponents(mu, arm_shift=1, leg_shift=1):
    """Exponent pairs (l(u)+leg_shift, a(u)+arm_shift) over dg'(mu), in reading order."""
    table = arm_table(mu)
    return [(table[u][1] + leg_shift, table[u][0] + arm_shift) for u in reading_order(table)]


def attacks(u, v):
    """Same row, or consecutive rows with the lower box strictly to the right."""
    if u == v:
        return False
    (i, j), (k, l) = u, v
    if j == l:
        return True
    if j == l + 1:
        return i < k
    if l == j + 1:
        return k < i
    return False


def attacking_pairs(boxes):
    """All attacking pairs (u, v) with u before v in reading order."""
    ordered = reading_order(boxes)
    return [
        (u, v)
        for a, u in enumerate(ordered)
        for v in ordered[a + 1:]
        if attacks(u, v)
    ]


class TripleKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class Triple:
    u: tuple
    v: tuple
    w: tuple
    kind: TripleKind


def enumerate_triples(mu):
    """All triples (u, v, w) with u in dg'(mu), v in arm(u) and w = d(u)."""
    out = []
    for u in reading_order(column_diagram(mu)):
        w = below(u)
        for v in reading_order(arm_left(u, mu)):
            out.append(Triple(u, v, w, TripleKind.TYPE_II))
        for v in reading_order(arm_right(u, mu)):
            out.append(Triple(u, v, w, TripleKind.TYPE_I))
    return out


# -- index maps -------------------------------------------------------------

def pi_shift(mu):
    """(mu_n + 1, mu_1, ..., mu_{n-1})."""
    return (mu[-1] + 1,) + tuple(mu[:-1])


def pi_unshift(mu):
    """Inverse of ``pi_shift``; needs mu_1 >= 1."""
    if mu[0] < 1:
        raise ValueError(f"{mu} is not in the image of pi")
    return tuple(mu[1:]) + (mu[0] - 1,)


def s_i(mu, i):
    """Swap parts i and i+1 (1-based)."""
    if not 1 <= i < len(mu):
        raise ValueError(f"s_{i} is undefined for n={len(mu)}")
    m = list(mu)
    m[i - 1], m[i] = m[i], m[i - 1]
    return tuple(m)


def pi_box(u, n):
    """Box map dg^(mu) -> dg^(pi(mu)): (i, j) -> (i+1, j), (n, j) -> (1, j+1)."""
    i, j = u
    return (i + 1, j) if i < n else (1, j + 1)


# -- Bruhat order -------------------------------------------------------------

def _bruhat_down(rho):
    n = len(rho)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = rho[i], rho[j]
            if a < b:
                m = list(rho)
                m[i], m[j] = b, a
                yield tuple(m)
            elif a > b + 1:
                # rho = sigma_ij(lam) for lam with lam_j - lam_i > 1,
                # and lam + e_i - e_j lies below rho
                m = list(rho)
                m[i], m[j] = b + 1, a - 1
                yield tuple(m)


@lru_cache(maxsize=None)
def bruhat_lower_set(mu):
    """All lam <= mu, by breadth-first closure over the covering rules."""
    seen = {mu}
    queue = deque([mu])
    while queue:
        rho = queue.popleft()
        for nxt in _bruhat_down(rho):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def bruhat_leq(lam, mu):
    """lam <= mu in Bruhat order; compositions of different size are incomparable."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("compositions of different lengths")
    if sum(lam) != sum(mu):
        return False
    return lam in bruhat_lower_set(mu)


# -- enumeration helpers --------------------------------------------------------

def rearrangements(parts):
    """Distinct rearrangements of ``parts``, sorted."""
    return sorted(set(permutations(parts)))


def compositions(n, total):
    """All compositions of ``total`` into ``n`` non-negative parts."""
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(n - 1, total - first):
            yield (first,) + rest
