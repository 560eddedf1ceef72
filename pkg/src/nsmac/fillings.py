"""Fillings of column diagrams and their statistics.

A ``Filling`` stores one value per box of dg'(mu), in a flat tuple indexed
by the reading order of dg'(mu).  The augmented filling is implicit: the
basement box (j, 0) always holds j.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .shapes import (
    arm_table,
    attacks,
    augmented_diagram,
    column_diagram,
    enumerate_triples,
    pi_box,
    pi_shift,
    reading_key,
    reading_order,
)

__all__ = [
    "Layout",
    "layout",
    "Filling",
    "Stats",
    "PlainStats",
    "is_non_attacking",
    "enumerate_non_attacking",
    "enumerate_fillings",
    "stats",
    "plain_stats",
    "count_inversion_triples",
    "count_coinversion_triples",
    "coinversion_by_orientation",
    "complement_filling",
    "pi_transport",
]


class Layout:
    """Per-composition lookup tables shared by every filling of mu."""

    def __init__(self, mu):
        self.mu = tuple(mu)
        self.n = len(mu)
        self.boxes = tuple(reading_order(column_diagram(mu)))
        self.index = {u: p for p, u in enumerate(self.boxes)}
        table = arm_table(self.mu)
        self.arm = tuple(table[u][0] for u in self.boxes)
        self.leg = tuple(table[u][1] for u in self.boxes)
        self.row = tuple(u[1] for u in self.boxes)
        self.col = tuple(u[0] for u in self.boxes)
        # position of d(u) in the flat array, or -1 when d(u) is a basement box
        self.below = tuple(
            self.index[(i, j - 1)] if j > 1 else -1 for (i, j) in self.boxes
        )
        self.arm_total = sum(self.arm)
        self.row0_pairs = sum(
            1 for a in range(self.n) for b in range(a + 1, self.n) if mu[a] <= mu[b]
        )
        # attacking pairs inside dg'(mu), earlier position first
        self.earlier_attackers = tuple(
            tuple(p for p in range(r) if attacks(self.boxes[p], self.boxes[r]))
            for r in range(len(self.boxes))
        )
        self.inner_pairs = tuple(
            (p, r) for r in range(len(self.boxes)) for p in self.earlier_attackers[r]
        )
        # a row-1 box (i, 1) attacks the basement boxes (k, 0) with k > i;
        # those all come later in reading order than every box of dg'(mu)
        self.row1_boxes = tuple(p for p, u in enumerate(self.boxes) if u[1] == 1)

    def __len__(self):
        return len(self.boxes)


@lru_cache(maxsize=None)
def layout(mu):
    return Layout(tuple(mu))


@dataclass(frozen=True)
class Filling:
    mu: tuple
    values: tuple

    def __post_init__(self):
        if len(self.values) != sum(self.mu):
            raise ValueError("one value per box of dg'(mu) is required")
        if any(v < 1 for v in self.values):
            raise ValueError("filling values must be positive")

    @property
    def layout(self):
        return layout(self.mu)

    @classmethod
    def from_boxes(cls, mu, assignment):
        lay = layout(tuple(mu))
        return cls(tuple(mu), tuple(assignment[u] for u in lay.boxes))

    @classmethod
    def from_rows(cls, mu, rows):
        """Rows listed from row 1 upward, left to right within a row."""
        mu = tuple(mu)
        assignment = {}
        for j, row in enumerate(rows, 1):
            cols = [i for i in range(1, len(mu) + 1) if mu[i - 1] >= j]
            if len(cols) != len(row):
                raise ValueError(f"row {j} of {mu} has {len(cols)} boxes, got {len(row)}")
            assignment.update({(i, j): v for i, v in zip(cols, row)})
        if len(assignment) != sum(mu):
            raise ValueError("rows do not cover the diagram")
        return cls.from_boxes(mu, assignment)

    def rows(self):
        height = max(self.mu, default=0)
        out = []
        for j in range(1, height + 1):
            out.append([self.value((i, j)) for i in range(1, len(self.mu) + 1) if self.mu[i - 1] >= j])
        return out

    def value(self, box):
        """Augmented value at ``box``; basement boxes hold their column index."""
        if box[1] == 0:
            return box[0]
        return self.values[layout(self.mu).index[box]]

    def as_dict(self):
        return dict(zip(layout(self.mu).boxes, self.values))

    def x_exponent(self, n=None):
        e = [0] * (n or len(self.mu))
        for v in self.values:
            e[v - 1] += 1
        return tuple(e)

    def to_json(self):
        return json.dumps({"mu": list(self.mu), "rows": self.rows()}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        return cls.from_rows(data["mu"], data["rows"])


def _below_value(lay, values, p):
    b = lay.below[p]
    return values[b] if b >= 0 else lay.col[p]


def is_non_attacking(sigma):
    """True iff the augmented filling gives distinct values to attacking boxes."""
    lay = sigma.layout
    vals = sigma.values
    for p, r in lay.inner_pairs:
        if vals[p] == vals[r]:
            return False
    for p in lay.row1_boxes:
        if vals[p] > lay.col[p]:
            return False
    return True


def enumerate_fillings(mu, alphabet=None, augmented=True, non_attacking=True, prefix=()):
    """Yield fillings of dg'(mu) with values in [alphabet].

    Boxes are assigned in reading order, so every attacking constraint looks
    back at already-assigned boxes (and, for row-1 boxes, at the basement).
    ``prefix`` fixes the first reading-order values, which lets a caller
    split the stream between workers.
    """
    mu = tuple(mu)
    lay = layout(mu)
    m = alphabet if alphabet is not None else lay.n
    size = len(lay)
    if not non_attacking:
        for vals in product(range(1, m + 1), repeat=size):
            if tuple(vals[:len(prefix)]) == tuple(prefix):
                yield Filling(mu, vals)
        return
    vals = [0] * size
    caps = [
        min(m, lay.col[p]) if augmented and lay.row[p] == 1 else m
        for p in range(size)
    ]
    attackers = lay.earlier_attackers

    def fill(p):
        if p == size:
            yield Filling(mu, tuple(vals))
            return
        if p < len(prefix):
            choices = (prefix[p],)
        else:
            choices = range(1, caps[p] + 1)
        used = {vals[a] for a in attackers[p]}
        for v in choices:
            if v in used or v > caps[p]:
                continue
            vals[p] = v
            yield from fill(p + 1)
        vals[p] = 0

    yield from fill(0)


def enumerate_non_attacking(mu, prefix=()):
    """Non-attacking fillings of mu with values in [n], n = len(mu)."""
    return enumerate_fillings(mu, prefix=prefix)


@dataclass(frozen=True)
class Stats:
    descents: frozenset
    maj: int
    inv_count: int
    inv: int
    coinv: int
    maj_prime: int
    coinv_prime: int


def _inversion_count(sigma):
    """|Inv| over all attacking pairs of the augmented diagram."""
    lay = sigma.layout
    vals = sigma.values
    count = sum(1 for p, r in lay.inner_pairs if vals[p] > vals[r])
    # row-1 box (i, 1) against basement (k, 0), k > i: the box reads first
    for p in lay.row1_boxes:
        i, v = lay.col[p], vals[p]
        count += sum(1 for k in range(i + 1, lay.n + 1) if v > k)
    # basement row read right to left: every pair is an inversion
    count += lay.n * (lay.n - 1) // 2
    return count


def stats(sigma):
    lay = sigma.layout
    vals = sigma.values
    des = []
    maj = maj_p = arm_des = arm_diff = 0
    for p in range(len(lay)):
        v, w = vals[p], _below_value(lay, vals, p)
        if v > w:
            des.append(lay.boxes[p])
            maj += lay.leg[p] + 1
            arm_des += lay.arm[p]
        elif v < w:
            maj_p += lay.leg[p] + 1
        if v != w:
            arm_diff += lay.arm[p]
    inv_count = _inversion_count(sigma)
    inv = inv_count - lay.row0_pairs - arm_des
    coinv = lay.arm_total - inv
    return Stats(
        descents=frozenset(des),
        maj=maj,
        inv_count=inv_count,
        inv=inv,
        coinv=coinv,
        maj_prime=maj_p,
        coinv_prime=arm_diff - coinv,
    )


@dataclass(frozen=True)
class PlainStats:
    maj: int
    inv: int


def plain_stats(sigma, alphabet=None):
    """maj and inv of the unaugmented filling (no basement row).

    Only pairs and descents inside dg'(mu) count; row-1 boxes are never
    descents.  ``sigma`` may be attacking.
    """
    lay = sigma.layout
    vals = sigma.values
    if alphabet is not None and any(v > alphabet for v in vals):
        raise ValueError(f"filling uses values above {alphabet}")
    maj = arm_des = 0
    for p in range(len(lay)):
        b = lay.below[p]
        if b >= 0 and vals[p] > vals[b]:
            maj += lay.leg[p] + 1
            arm_des += lay.arm[p]
    inv_count = sum(1 for p, r in lay.inner_pairs if vals[p] > vals[r])
    return PlainStats(maj=maj, inv=inv_count - arm_des)


def _chi(sigma, x, y):
    if reading_key(x) > reading_key(y):
        x, y = y, x
    return 1 if sigma.value(x) > sigma.value(y) else 0


def _triple_signs(sigma):
    for tr in enumerate_triples(sigma.mu):
        yield tr, _chi(sigma, tr.u, tr.v) + _chi(sigma, tr.v, tr.w) - _chi(sigma, tr.u, tr.w)


def count_inversion_triples(sigma):
    return sum(1 for _, s in _triple_signs(sigma) if s == 1)


def count_coinversion_triples(sigma):
    return sum(1 for _, s in _triple_signs(sigma) if s == 0)


def coinversion_by_orientation(sigma, triple):
    """Cyclic-orientation test; valid for non-attacking fillings only."""
    a, b, c = (sigma.value(triple.u), sigma.value(triple.v), sigma.value(triple.w))
    return a < b < c or b < c < a or c < a < b


def complement_filling(sigma):
    """The filling with every value v replaced by n + 1 - v.

    The basement transforms too, so the result is returned as a plain
    mapping over the augmented diagram rather than a ``Filling``.
    """
    n = len(sigma.mu)
    return {u: n + 1 - sigma.value(u) for u in augmented_diagram(sigma.mu)}


def pi_transport(sigma):
    """Carry a non-attacking filling of mu to one of pi(mu).

    Boxes move by ``pi_box`` and values cycle i -> i+1 (mod n).
    """
    if not is_non_attacking(sigma):
        raise ValueError("pi_transport needs a non-attacking filling")
    mu = sigma.mu
    n = len(mu)
    assignment = {}
    for u in augmented_diagram(mu):
        pu = pi_box(u, n)
        if pu[1] >= 1:
            assignment[pu] = sigma.value(u) % n + 1
    return Filling.from_boxes(pi_shift(mu), assignment)
