"""Isotopisms, autotopisms, regular bijections and principal isotopes."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from ._config import all_perms, check_cap
from .core import LoopTable, Permutation, identity_perm, left_translation, right_translation
from .errors import OrderMismatch
from .identities import IdentityId, satisfies

__all__ = [
    "IsotopismTriple", "RegularKind", "RegularSet", "is_isotopism", "is_autotopism",
    "principal_isotope", "left_isotope", "right_isotope", "isotope_table",
    "translation_transfer_check", "lc_autotopism_criterion", "rc_autotopism_criterion",
    "c_mu_criterion", "regular_set", "autotopism_group", "is_left_universal",
    "is_right_universal", "is_universal", "universality_witness",
]


@dataclass(frozen=True, order=True)
class IsotopismTriple:
    U: Permutation
    V: Permutation
    W: Permutation

    def __post_init__(self):
        if not self.U.n == self.V.n == self.W.n:
            raise OrderMismatch(self.U.n, max(self.V.n, self.W.n))

    @property
    def n(self):
        return self.U.n

    def __mul__(self, other):
        return IsotopismTriple(self.U * other.U, self.V * other.V, self.W * other.W)

    def __invert__(self):
        return IsotopismTriple(~self.U, ~self.V, ~self.W)

    @classmethod
    def identity(cls, n):
        i = identity_perm(n)
        return cls(i, i, i)


def _arr(p):
    return p.array() if isinstance(p, Permutation) else np.asarray(p, dtype=np.intp)


def _table(X):
    return X.table if isinstance(X, LoopTable) else np.asarray(X)


def is_isotopism(G, H, t: IsotopismTriple) -> bool:
    """``xU o yV == (x*y)W`` for every pair, with ``*`` in G and ``o`` in H."""
    g, h = _table(G), _table(H)
    if g.shape != h.shape:
        raise OrderMismatch(g.shape[0], h.shape[0])
    if t.n != g.shape[0]:
        raise OrderMismatch(g.shape[0], t.n)
    U, V, W = _arr(t.U), _arr(t.V), _arr(t.W)
    return bool((h[U[:, None], V[None, :]] == W[g]).all())


def is_autotopism(L, t: IsotopismTriple) -> bool:
    return is_isotopism(L, L, t)


def isotope_table(G, A, B, C):
    """The table ``H`` making ``(A, B, C)`` an isotopism from ``G``; may lack an identity."""
    g = _table(G)
    A, B, C = _arr(A), _arr(B), _arr(C)
    h = np.empty_like(g)
    h[A[:, None], B[None, :]] = C[g]
    return h


def principal_isotope(G: LoopTable, f, g) -> LoopTable:
    """The f,g-principal isotope ``x o y = (x/g) * (f\\y)``, with identity ``f*g``.

    ``(R_g, L_f, I)`` is an isotopism from ``G`` onto the result.
    """
    t = G.table
    h = t[G.rdiv[:, g][:, None], G.ldiv[f, :][None, :]]
    return LoopTable(h, t[f, g])


def left_isotope(G: LoopTable, g) -> LoopTable:
    return principal_isotope(G, G.identity, g)


def right_isotope(G: LoopTable, f) -> LoopTable:
    return principal_isotope(G, f, G.identity)


def translation_transfer_holds(G, H, A, B, C) -> bool:
    """Check ``R'_{xB} = A^-1 R_x C`` and ``L'_{yA} = B^-1 L_y C`` for all x, y.

    Primed translations are taken in ``H``; rows of the arrays below are maps
    indexed by ``x`` (resp. ``y``), composed left to right.
    """
    g, h = _table(G), _table(H)
    A, B, C = _arr(A), _arr(B), _arr(C)
    A_inv, B_inv = np.argsort(A), np.argsort(B)
    R = g.T                      # R[x] is R_x
    L = g                        # L[y] is L_y
    R_h = h.T[B]                 # R_h[x] is R'_{xB}
    L_h = h[A]                   # L_h[y] is L'_{yA}
    # A^-1 R_x C applied to z is C[R_x[A^-1[z]]]
    eq1 = np.array_equal(R_h, C[R[:, A_inv]])
    eq2 = np.array_equal(L_h, C[L[:, B_inv]])
    return eq1 and eq2


def translation_transfer_check(G: LoopTable, f, g) -> bool:
    """Translation identities for the principal isotope under ``(R_g, L_f, I)``."""
    H = principal_isotope(G, f, g)
    A = G.table[:, g]
    B = G.table[f, :]
    return translation_transfer_holds(G, H, A, B, np.arange(G.order))


def _square(p: Permutation) -> Permutation:
    return p * p


def lc_autotopism_criterion(L: LoopTable) -> bool:
    """``(L_x^2, I, L_x^2)`` is an autotopism for every x."""
    i = identity_perm(L.order)
    for x in range(L.order):
        sq = _square(left_translation(L, x))
        if not is_autotopism(L, IsotopismTriple(sq, i, sq)):
            return False
    return True


def rc_autotopism_criterion(L: LoopTable) -> bool:
    """``(I, R_x^2, R_x^2)`` is an autotopism for every x."""
    i = identity_perm(L.order)
    for x in range(L.order):
        sq = _square(right_translation(L, x))
        if not is_autotopism(L, IsotopismTriple(i, sq, sq)):
            return False
    return True


def is_mu_pair(L, U, V) -> bool:
    """``xU * y == x * yV`` for all x, y."""
    t = _table(L)
    U, V = _arr(U), _arr(V)
    return bool((t[U, :] == t[:, V]).all())


def c_mu_criterion(L: LoopTable) -> bool:
    """For every x, ``R_x^2`` is mu-regular with adjoint ``L_x^2``."""
    return all(
        is_mu_pair(L, _square(right_translation(L, x)), _square(left_translation(L, x)))
        for x in range(L.order)
    )


class RegularKind(enum.Enum):
    LAMBDA = "lambda"
    RHO = "rho"
    MU = "mu"


@dataclass(frozen=True)
class RegularSet:
    kind: RegularKind
    members: tuple
    adjoints: tuple = field(default=())

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in set(self.members)


def _regular_mask(t, P, kind):
    n = t.shape[0]
    cols = np.arange(n)
    if kind is RegularKind.LAMBDA:
        # (U, I, U): xU * y == (x*y)U
        return (t[P[:, :, None], cols[None, None, :]] == P[:, t]).all(axis=(1, 2))
    if kind is RegularKind.RHO:
        # (I, U, U): x * yU == (x*y)U
        return (t[cols[None, :, None], P[:, None, :]] == P[:, t]).all(axis=(1, 2))
    raise ValueError(kind)


def regular_set(L: LoopTable, kind) -> RegularSet:
    """All lambda-, rho- or mu-regular bijections, by scanning every permutation."""
    kind = RegularKind(kind) if not isinstance(kind, RegularKind) else kind
    n = L.order
    check_cap(n)
    t = L.table
    P = all_perms(n)
    if kind is RegularKind.MU:
        # x = e in xU*y = x*yV forces V = L_{eU}
        V = t[P[:, L.identity]]
        ok = (t[P[:, :, None], np.arange(n)[None, None, :]] == t[np.arange(n)[None, :, None], V[:, None, :]]).all(axis=(1, 2))
        members = tuple(Permutation._trusted(p) for p in P[ok])
        adjoints = tuple(Permutation._trusted(v) for v in V[ok])
        return RegularSet(kind, members, adjoints)
    ok = _regular_mask(t, P, kind)
    return RegularSet(kind, tuple(Permutation._trusted(p) for p in P[ok]))


def autotopism_group(L: LoopTable) -> list:
    """Every autotopism of ``L``.

    With ``y = e`` the equation forces ``W = U R_a`` for ``a = eV``; with
    ``x = e`` it forces ``V = W L_{eU}^-1``.  Each candidate is then checked in full.
    """
    n = L.order
    check_cap(n)
    t, e = L.table, L.identity
    P = all_perms(n)
    out = []
    for a in range(n):
        W = t[P, a]                                  # xW = (xU) a
        V = L.ldiv[P[:, e][:, None], W]              # yV = (eU) \ (yW)
        ok = (t[P[:, :, None], V[:, None, :]] == W[:, t]).all(axis=(1, 2))
        for u, v, w in zip(P[ok], V[ok], W[ok]):
            out.append(IsotopismTriple(Permutation._trusted(u), Permutation._trusted(v),
                                       Permutation._trusted(w)))
    out.sort()
    return out


Predicate = Union[IdentityId, str, Callable[[LoopTable], bool]]


def _as_predicate(prop: Predicate) -> Callable[[LoopTable], bool]:
    if callable(prop) and not isinstance(prop, IdentityId):
        return prop
    ident = IdentityId.parse(prop)
    return lambda L: satisfies(L, ident)


def universality_witness(G: LoopTable, prop: Predicate, side="both"):
    """First ``(f, g)`` in lexicographic order whose isotope fails ``prop``, or None.

    ``side`` selects left isotopes ``(e, g)``, right isotopes ``(f, e)`` or all
    principal isotopes.
    """
    pred = _as_predicate(prop)
    e, n = G.identity, G.order
    if side == "left":
        pairs = ((e, g) for g in range(n))
    elif side == "right":
        pairs = ((f, e) for f in range(n))
    elif side == "both":
        pairs = ((f, g) for f in range(n) for g in range(n))
    else:
        raise ValueError(f"side must be left, right or both, not {side!r}")
    for f, g in pairs:
        if not pred(principal_isotope(G, f, g)):
            return f, g
    return None


def is_left_universal(G: LoopTable, prop: Predicate) -> bool:
    return universality_witness(G, prop, "left") is None


def is_right_universal(G: LoopTable, prop: Predicate) -> bool:
    return universality_witness(G, prop, "right") is None


def is_universal(G: LoopTable, prop: Predicate) -> bool:
    return universality_witness(G, prop, "both") is None
