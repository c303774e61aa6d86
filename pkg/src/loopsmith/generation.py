"""Exhaustive loop generation and structured example loops."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from ._config import all_perms, check_cap
from .core import LoopTable, make_loop
from .errors import NotSteiner
from .filters import parse_filter
from .identities import IdentityId

__all__ = [
    "GenSpec", "TripleSystem", "all_loops", "loops_rowwise", "canonical_form",
    "dedup_up_to_isomorphism", "cyclic_group", "direct_product", "symmetric_group",
    "steiner_loop", "STS7", "STS9", "structured_corpus",
]


@dataclass(frozen=True)
class GenSpec:
    order: int
    normalized: bool = True
    filter: str | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.filter is not None:
            parse_filter(self.filter)


def _cellwise(n, commutative=False):
    """Normalized loops of order n by cell-by-cell Latin completion, in lexicographic order."""
    t = np.zeros((n, n), dtype=np.intp)
    t[0] = t[:, 0] = np.arange(n)
    full = (1 << n) - 1
    row_used = [1 << r for r in range(n)]
    col_used = [1 << c for c in range(n)]
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def fill(k):
        if k == len(cells):
            yield t.copy()
            return
        r, c = cells[k]
        free = full & ~(row_used[r] | col_used[c])
        if commutative and c < r:
            v = int(t[c, r])
            free &= 1 << v
        while free:
            bit = free & -free
            free ^= bit
            v = bit.bit_length() - 1
            t[r, c] = v
            row_used[r] |= bit
            col_used[c] |= bit
            yield from fill(k + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit

    if n == 1:
        yield t.copy()
        return
    yield from fill(0)


def loops_rowwise(n):
    """Normalized loops of order n built row by row from whole permutations.

    Independent of the cell-wise generator; used to cross-check it.
    """
    if n == 1:
        yield np.zeros((1, 1), dtype=np.intp)
        return
    candidates = {r: [p for p in permutations(range(n)) if p[0] == r] for r in range(1, n)}
    rows = [tuple(range(n))]

    def extend(r):
        if r == n:
            yield np.array(rows, dtype=np.intp)
            return
        for p in candidates[r]:
            if all(p[c] != q[c] for q in rows for c in range(n)):
                rows.append(p)
                yield from extend(r + 1)
                rows.pop()

    yield from extend(1)


def all_loops(spec):
    """Every normalized loop of the given order (identity 0), lexicographically.

    ``spec`` is a :class:`GenSpec` or an order.  A filter expression drops
    loops that fail it; a required ``comm`` tag is also used to prune.
    """
    if not isinstance(spec, GenSpec):
        spec = GenSpec(int(spec))
    if not spec.normalized:
        raise ValueError("only normalized generation is supported")
    check_cap(spec.order)
    flt = parse_filter(spec.filter) if spec.filter else None
    comm = flt is not None and IdentityId.COMMUTATIVE in flt.required_tags()
    for t in _cellwise(spec.order, commutative=comm):
        L = LoopTable(t, 0)
        if flt is None or flt(L):
            yield L


def canonical_form(L: LoopTable) -> LoopTable:
    """Lexicographically least relabeling of ``L`` with the identity sent to 0."""
    n = L.order
    check_cap(n)
    P = all_perms(n)
    P = P[P[:, L.identity] == 0]
    inv = np.argsort(P, axis=1)
    tabs = L.table[inv[:, :, None], inv[:, None, :]]
    relabeled = np.take_along_axis(P, tabs.reshape(len(P), -1), axis=1)
    best = np.lexsort(relabeled.T[::-1])[0]
    return LoopTable(relabeled[best].reshape(n, n), 0)


def dedup_up_to_isomorphism(loops):
    """One canonical representative per isomorphism class, sorted."""
    seen = {canonical_form(L) for L in loops}
    return sorted(seen)


@lru_cache(maxsize=None)
def cyclic_group(n) -> LoopTable:
    a = np.arange(n)
    return LoopTable((a[:, None] + a[None, :]) % n, 0)


def direct_product(G: LoopTable, H: LoopTable) -> LoopTable:
    """Componentwise product; the pair (g, h) is element ``g*|H| + h``."""
    m = H.order
    g = G.table[:, None, :, None]
    h = H.table[None, :, None, :]
    t = (g * m + h).reshape(G.order * m, G.order * m)
    return LoopTable(t, G.identity * m + H.identity)


@lru_cache(maxsize=None)
def symmetric_group(k) -> LoopTable:
    """Permutations of ``range(k)`` in lexicographic order; ``x*y`` applies x then y."""
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [[index[tuple(q[i] for i in p)] for q in perms] for p in perms]
    return make_loop(rows)


@dataclass(frozen=True)
class TripleSystem:
    v: int
    triples: tuple

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(tuple(sorted(b)) for b in self.triples))

    def points(self):
        return sorted({p for b in self.triples for p in b})

    def validate(self):
        pts = self.points()
        if len(pts) != self.v:
            raise NotSteiner((pts[0], pts[0]) if pts else (0, 0), 0)
        seen = {}
        for b in self.triples:
            if len(set(b)) != 3:
                raise NotSteiner((b[0], b[1]), 2)
            for pair in combinations(b, 2):
                seen[pair] = seen.get(pair, 0) + 1
        for pair in combinations(pts, 2):
            if seen.get(pair, 0) != 1:
                raise NotSteiner(pair, seen.get(pair, 0))


STS7 = TripleSystem(7, ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)))
# affine plane of order 3 on the grid 1..9
STS9 = TripleSystem(9, (
    (1, 2, 3), (4, 5, 6), (7, 8, 9),
    (1, 4, 7), (2, 5, 8), (3, 6, 9),
    (1, 5, 9), (2, 6, 7), (3, 4, 8),
    (1, 6, 8), (2, 4, 9), (3, 5, 7),
))


def steiner_loop(ts: TripleSystem) -> LoopTable:
    """Identity 0 adjoined to the points; ``x*x = 0`` and ``x*y`` completes the triple."""
    ts.validate()
    index = {p: i + 1 for i, p in enumerate(ts.points())}
    n = ts.v + 1
    t = np.zeros((n, n), dtype=np.intp)
    t[0] = t[:, 0] = np.arange(n)
    for b in ts.triples:
        a, b_, c = (index[p] for p in b)
        for x, y, z in ((a, b_, c), (a, c, b_), (b_, c, a)):
            t[x, y] = t[y, x] = z
    return make_loop(t)


def structured_corpus():
    """Hand-built loops beyond the exhaustive range, as ``(label, loop)`` pairs."""
    z2 = cyclic_group(2)
    s8, s10 = steiner_loop(STS7), steiner_loop(STS9)
    out = [(f"Z{n}", cyclic_group(n)) for n in range(1, 9)]
    out += [
        ("S3", symmetric_group(3)),
        ("Klein", direct_product(z2, z2)),
        ("Z4xZ2", direct_product(cyclic_group(4), z2)),
        ("Steiner(STS7)", s8),
        ("Steiner(STS9)", s10),
        ("S3xZ2", direct_product(symmetric_group(3), z2)),
        ("Steiner(STS7)xZ2", direct_product(s8, z2)),
        ("Steiner(STS9)xZ2", direct_product(s10, z2)),
    ]
    return out
