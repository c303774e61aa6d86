"""Cayley-table loops and permutations on their elements.

Elements of an order-n loop are the integers ``0..n-1``.  Maps act on the
right, as in ``yR_x = yx``: ``p * q`` applies ``p`` first and then ``q``.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import BadSymbol, NoIdentity, NotLatinColumn, NotLatinRow, OrderMismatch

__all__ = [
    "LoopTable", "Permutation", "make_loop", "mul", "left_div", "right_div",
    "left_translation", "right_translation", "compose", "inverse", "identity_perm",
    "transpose",
]


class Permutation:
    """A bijection of ``range(n)``; ``image[i]`` is the image of ``i``."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _trusted(cls, image):
        p = object.__new__(cls)
        object.__setattr__(p, "image", tuple(int(i) for i in image))
        return p

    @property
    def n(self):
        return len(self.image)

    def __call__(self, x):
        return self.image[x]

    def __len__(self):
        return len(self.image)

    def __iter__(self):
        return iter(self.image)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return self.image < other.image

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def array(self):
        return np.array(self.image, dtype=np.intp)

    def cycles(self):
        seen, out = set(), []
        for start in range(self.n):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.image[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted(len(c) for c in self.cycles()))

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.image))

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation(id, n={self.n})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The map ``z -> (zp)q``."""
    if p.n != q.n:
        raise OrderMismatch(p.n, q.n)
    return Permutation._trusted(q.image[i] for i in p.image)


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, x in enumerate(p.image):
        out[x] = i
    return Permutation._trusted(out)


def identity_perm(n: int) -> Permutation:
    return Permutation._trusted(range(n))


class LoopTable:
    """An immutable finite loop given by its Cayley table.

    ``table[x, y]`` is ``x*y``.  Build instances with :func:`make_loop`,
    which validates the Latin property and locates the identity.
    """

    def __init__(self, table, identity):
        table = np.array(table, dtype=np.intp)
        table.flags.writeable = False
        self._table = table
        self.identity = int(identity)

    @property
    def table(self):
        return self._table

    @property
    def order(self):
        return self._table.shape[0]

    def __len__(self):
        return self.order

    def rows(self):
        return self._table.tolist()

    @cached_property
    def _key(self):
        return (self.order, self._table.tobytes())

    def __eq__(self, other):
        return isinstance(other, LoopTable) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return (self.order, self.rows()) < (other.order, other.rows())

    @cached_property
    def ldiv(self):
        """``ldiv[x, y]`` is the unique ``z`` with ``x*z = y``."""
        n = self.order
        out = np.empty_like(self._table)
        rows = np.arange(n)[:, None]
        out[rows, self._table] = np.arange(n)[None, :]
        out.flags.writeable = False
        return out

    @cached_property
    def rdiv(self):
        """``rdiv[y, x]`` is the unique ``z`` with ``z*x = y``."""
        n = self.order
        out = np.empty_like(self._table)
        cols = np.arange(n)[None, :]
        out[self._table, cols] = np.arange(n)[:, None]
        out.flags.writeable = False
        return out

    def mul(self, x, y):
        return int(self._table[x, y])

    def is_commutative(self):
        return bool((self._table == self._table.T).all())

    def __repr__(self):
        return f"LoopTable(order={self.order}, identity={self.identity}, rows={self.rows()})"


def _latin_errors(t):
    n = t.shape[0]
    full = np.arange(n)
    for x in range(n):
        if not np.array_equal(np.sort(t[x]), full):
            raise NotLatinRow(x)
    for y in range(n):
        if not np.array_equal(np.sort(t[:, y]), full):
            raise NotLatinColumn(y)


def make_loop(rows) -> LoopTable:
    """Validate a square grid as a loop table and detect its identity."""
    try:
        t = np.array(rows, dtype=np.intp)
    except (TypeError, ValueError) as exc:
        raise BadSymbol(0, 0, rows) from exc
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError(f"table must be a non-empty square grid, got shape {t.shape}")
    n = t.shape[0]
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        r, c = map(int, bad[0])
        raise BadSymbol(r, c, int(t[r, c]))
    _latin_errors(t)
    full = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], full) and np.array_equal(t[:, e], full):
            return LoopTable(t, e)
    raise NoIdentity()


def is_latin(t) -> bool:
    t = np.asarray(t)
    try:
        _latin_errors(t)
    except (NotLatinRow, NotLatinColumn):
        return False
    return True


def mul(L: LoopTable, x, y):
    return L.mul(x, y)


def left_div(L: LoopTable, x, y):
    """``x\\y``: the z with ``x*z = y``."""
    return int(L.ldiv[x, y])


def right_div(L: LoopTable, y, x):
    """``y/x``: the z with ``z*x = y``."""
    return int(L.rdiv[y, x])


def left_translation(L: LoopTable, x) -> Permutation:
    return Permutation._trusted(L.table[x])


def right_translation(L: LoopTable, x) -> Permutation:
    return Permutation._trusted(L.table[:, x])


def transpose(L: LoopTable) -> LoopTable:
    """The opposite loop, ``x o y = y*x``."""
    return LoopTable(L.table.T, L.identity)


def relabel(L: LoopTable, perm) -> LoopTable:
    """Carry ``L`` along the bijection ``x -> perm[x]``."""
    p = np.asarray(perm, dtype=np.intp)
    inv = np.argsort(p)
    t = p[L.table[np.ix_(inv, inv)]]
    return LoopTable(t, int(p[L.identity]))
