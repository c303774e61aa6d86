"""Nuclei, centrum, center, square-centrality and cosets."""
from __future__ import annotations

import numpy as np

from .core import LoopTable

__all__ = [
    "ElementSet", "left_nucleus", "right_nucleus", "middle_nucleus", "nucleus",
    "centrum", "center", "is_centrum_square", "is_central_square",
    "left_coset", "right_coset",
]


class ElementSet:
    """A subset of ``range(n)`` stored as a bitmask."""

    __slots__ = ("mask", "n")

    def __init__(self, members=(), n=0, *, mask=None):
        if mask is None:
            mask = 0
            for a in members:
                if not 0 <= a < n:
                    raise ValueError(f"element {a} outside range({n})")
                mask |= 1 << int(a)
        object.__setattr__(self, "mask", int(mask))
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def from_bools(cls, flags):
        mask = 0
        for i, f in enumerate(flags):
            if f:
                mask |= 1 << i
        return cls(n=len(flags), mask=mask)

    @classmethod
    def full(cls, n):
        return cls(n=n, mask=(1 << n) - 1)

    def __contains__(self, a):
        return 0 <= a < self.n and bool(self.mask >> int(a) & 1)

    def __iter__(self):
        return (a for a in range(self.n) if self.mask >> a & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __and__(self, other):
        return ElementSet(n=self.n, mask=self.mask & other.mask)

    def __or__(self, other):
        return ElementSet(n=self.n, mask=self.mask | other.mask)

    def __eq__(self, other):
        if isinstance(other, ElementSet):
            return self.n == other.n and self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.mask))

    def is_full(self):
        return self.mask == (1 << self.n) - 1

    def members(self):
        return tuple(self)

    def __repr__(self):
        return "{" + ", ".join(map(str, self)) + "}"


def _t(L):
    return L.table if isinstance(L, LoopTable) else np.asarray(L)


def _grid(t):
    n = t.shape[0]
    return np.arange(n)[:, None], np.arange(n)[None, :]


# The three nuclei are plain O(n^3) scans of the defining equations.  They
# also accept a bare quasigroup table.

def left_nucleus(L) -> ElementSet:
    """Elements ``a`` with ``(a*x)*y == a*(x*y)`` for all x, y."""
    t = _t(L)
    x, y = _grid(t)
    lhs = t[t[:, x], y]          # [a, x, y] -> (a x) y
    rhs = t[:, t[x, y]]          # [a, x, y] -> a (x y)
    return ElementSet.from_bools((lhs == rhs).all(axis=(1, 2)))


def right_nucleus(L) -> ElementSet:
    """Elements ``a`` with ``y*(x*a) == (y*x)*a`` for all x, y."""
    t = _t(L)
    n = t.shape[0]
    flags = []
    y, x = _grid(t)
    yx = t[y, x]
    for a in range(n):
        flags.append(bool((t[y, t[x, a]] == t[yx, a]).all()))
    return ElementSet.from_bools(flags)


def middle_nucleus(L) -> ElementSet:
    """Elements ``a`` with ``(y*a)*x == y*(a*x)`` for all x, y."""
    t = _t(L)
    n = t.shape[0]
    flags = []
    for a in range(n):
        ya = t[:, a][:, None]
        ax = t[a][None, :]
        flags.append(bool((t[ya, np.arange(n)[None, :]] == t[np.arange(n)[:, None], ax]).all()))
    return ElementSet.from_bools(flags)


def nucleus(L) -> ElementSet:
    return left_nucleus(L) & right_nucleus(L) & middle_nucleus(L)


def centrum(L) -> ElementSet:
    """Elements commuting with everything."""
    t = _t(L)
    return ElementSet.from_bools((t == t.T).all(axis=1))


def center(L) -> ElementSet:
    return nucleus(L) & centrum(L)


def _squares(t):
    return t[np.arange(t.shape[0]), np.arange(t.shape[0])]


def is_centrum_square(L) -> bool:
    c = centrum(L)
    return all(int(s) in c for s in _squares(_t(L)))


def is_central_square(L) -> bool:
    z = center(L)
    return all(int(s) in z for s in _squares(_t(L)))


def left_coset(L, g, S: ElementSet) -> ElementSet:
    """``{g*s : s in S}``."""
    t = _t(L)
    return ElementSet((int(t[g, s]) for s in S), t.shape[0])


def right_coset(L, S: ElementSet, f) -> ElementSet:
    """``{s*f : s in S}``."""
    t = _t(L)
    return ElementSet((int(t[s, f]) for s in S), t.shape[0])


def is_subloop(L, S: ElementSet) -> bool:
    """Closure under multiplication and both divisions, and containing the identity."""
    if L.identity not in S or not len(S):
        return False
    members = list(S)
    for a in members:
        for b in members:
            if (int(L.table[a, b]) not in S or int(L.ldiv[a, b]) not in S
                    or int(L.rdiv[a, b]) not in S):
                return False
    return True
