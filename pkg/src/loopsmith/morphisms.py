"""Isomorphism search and G-loop characterizations."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import all_perms, check_cap, perms_fixing
from .core import LoopTable, Permutation
from .errors import NotCentralLoop, OrderMismatch
from .identities import IdentityId, satisfies
from .isotopy import left_isotope, principal_isotope, right_isotope
from .subloops import (ElementSet, left_coset, left_nucleus, nucleus, right_coset,
                       right_nucleus)

__all__ = [
    "IsoWitness", "find_isomorphism", "element_invariants", "gloop_witness", "companion_table",
    "is_G_lambda", "is_G_rho", "is_G_loop_direct", "is_G_loop_wilson", "is_G_loop_theta",
    "theta_readings", "nucleus_membership_criterion", "pseudo_automorphism_companion_check",
    "gloop_coset_criterion", "coset_criterion_forms", "nucleus_transfer_check",
]


@dataclass(frozen=True)
class IsoWitness:
    map: Permutation

    def verify(self, G: LoopTable, H: LoopTable) -> bool:
        W = self.map.array()
        return bool((H.table[W[:, None], W[None, :]] == W[G.table]).all()) and \
            int(W[G.identity]) == H.identity

    def inverse(self):
        return IsoWitness(~self.map)


def _cycle_type(row):
    seen = np.zeros(len(row), dtype=bool)
    out = []
    for s in range(len(row)):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = row[x]
            k += 1
        out.append(k)
    return tuple(sorted(out))


def element_invariants(L: LoopTable):
    """Per-element data preserved by every isomorphism."""
    t, e = L.table, L.identity
    out = []
    for x in range(L.order):
        out.append((
            _cycle_type(t[x]),
            _cycle_type(t[:, x]),
            int(t[x, x]) == e,
            int(t[x, x]) == x,
            bool((t[x] == t[:, x]).all()),
        ))
    return out


def _closure(t, elems):
    closed = set(elems)
    frontier = list(closed)
    while frontier:
        new = []
        members = list(closed)
        for a in frontier:
            for b in members:
                for c in (int(t[a, b]), int(t[b, a])):
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
        frontier = new
    return closed


def _generators(L: LoopTable, inv):
    """A short generating sequence, preferring elements with rare invariants."""
    counts = {}
    for v in inv:
        counts[v] = counts.get(v, 0) + 1
    order = sorted(range(L.order), key=lambda x: (counts[inv[x]], x))
    gens, closed = [], {L.identity}
    for x in order:
        if x in closed:
            continue
        gens.append(x)
        closed = _closure(L.table, closed | {x})
        if len(closed) == L.order:
            break
    return gens


def find_isomorphism(G: LoopTable, H: LoopTable):
    """An isomorphism ``G -> H`` as an :class:`IsoWitness`, or None.

    Backtracks over images of a generating set; every other image is forced
    by multiplication, so the search is exact.
    """
    if G.order != H.order:
        raise OrderMismatch(G.order, H.order)
    n = G.order
    inv_g, inv_h = element_invariants(G), element_invariants(H)
    if sorted(inv_g) != sorted(inv_h):
        return None
    gt, ht = G.table, H.table
    gens = _generators(G, inv_g)
    phi = [-1] * n
    used = [False] * n
    phi[G.identity] = H.identity
    used[H.identity] = True

    def propagate(trail):
        changed = True
        while changed:
            changed = False
            mapped = [a for a in range(n) if phi[a] >= 0]
            for a in mapped:
                pa = phi[a]
                for b in mapped:
                    c = int(gt[a, b])
                    img = int(ht[pa, phi[b]])
                    if phi[c] < 0:
                        if used[img] or inv_g[c] != inv_h[img]:
                            return False
                        phi[c] = img
                        used[img] = True
                        trail.append(c)
                        changed = True
                    elif phi[c] != img:
                        return False
        return True

    def undo(trail):
        for c in trail:
            used[phi[c]] = False
            phi[c] = -1

    def search(k):
        if k == len(gens):
            return all(p >= 0 for p in phi)
        x = gens[k]
        if phi[x] >= 0:
            return search(k + 1)
        for y in range(n):
            if used[y] or inv_h[y] != inv_g[x]:
                continue
            trail = [x]
            phi[x] = y
            used[y] = True
            if propagate(trail) and search(k + 1):
                return True
            undo(trail)
        return False

    if not search(0):
        return None
    return IsoWitness(Permutation._trusted(phi))


def gloop_witness(G: LoopTable, side="both"):
    """First ``(f, g)`` whose principal isotope is not isomorphic to ``G``, or None."""
    e, n = G.identity, G.order
    if side == "left":
        pairs = [(e, g) for g in range(n)]
    elif side == "right":
        pairs = [(f, e) for f in range(n)]
    else:
        pairs = [(f, g) for f in range(n) for g in range(n)]
    for f, g in pairs:
        if find_isomorphism(G, principal_isotope(G, f, g)) is None:
            return f, g
    return None


def is_G_lambda(G: LoopTable) -> bool:
    return gloop_witness(G, "left") is None


def is_G_rho(G: LoopTable) -> bool:
    return gloop_witness(G, "right") is None


def is_G_loop_direct(G: LoopTable) -> bool:
    """Isomorphic to every f,g-principal isotope."""
    return gloop_witness(G, "both") is None


def is_G_loop_wilson(G: LoopTable) -> bool:
    """Isomorphic to every left isotope and every right isotope."""
    return is_G_lambda(G) and is_G_rho(G)


def _theta_table(G: LoopTable):
    """``ok[x, y, k]``: ``(theta R_x^-1, theta L_y^-1, theta)`` is an autotopism for the k-th theta."""
    n = G.order
    check_cap(n)
    t = G.table
    P = all_perms(n)
    ok = np.zeros((n, n, len(P)), dtype=bool)
    target = P[:, t]
    for x in range(n):
        A = G.rdiv[P, x]                  # u -> (u theta) / x
        for y in range(n):
            B = G.ldiv[y, P]              # v -> y \ (v theta)
            ok[x, y] = (t[A[:, :, None], B[:, None, :]] == target).all(axis=(1, 2))
    return ok


def theta_readings(G: LoopTable):
    """``(single, per_pair)``: one theta for every (x, y), versus one theta per pair."""
    ok = _theta_table(G)
    single = bool(ok.all(axis=(0, 1)).any())
    per_pair = bool(ok.any(axis=2).all())
    return single, per_pair


def is_G_loop_theta(G: LoopTable, reading="per_pair") -> bool:
    single, per_pair = theta_readings(G)
    if reading == "single":
        return single
    if reading == "per_pair":
        return per_pair
    raise ValueError(f"reading must be 'single' or 'per_pair', not {reading!r}")


def nucleus_membership_criterion(G: LoopTable, side) -> bool:
    """LEFT: e lies in the right nucleus of every left isotope.  RIGHT: e lies in
    the left nucleus of every right isotope."""
    side = side.upper()
    e = G.identity
    if side == "LEFT":
        return all(e in right_nucleus(left_isotope(G, g)) for g in range(G.order))
    if side == "RIGHT":
        return all(e in left_nucleus(right_isotope(G, f)) for f in range(G.order))
    raise ValueError(f"side must be LEFT or RIGHT, not {side!r}")


def companion_table(G: LoopTable):
    """Per companion c: (has right pseudo-automorphism, has left pseudo-automorphism)."""
    n = G.order
    check_cap(n)
    t = G.table
    U = perms_fixing(n, G.identity)
    Ut = U[:, t]                                   # (xy)U
    Ux = U[:, :, None]
    Uy = U[:, None, :]
    out = []
    for c in range(n):
        # (U, U R_c, U R_c): xU * (yU c) == ((xy)U) c
        right = (t[Ux, t[Uy, c]] == t[Ut, c]).all(axis=(1, 2)).any()
        # (U L_c, U, U L_c): (c xU) * yU == c ((xy)U)
        left = (t[t[c, Ux], Uy] == t[c, Ut]).all(axis=(1, 2)).any()
        out.append((bool(right), bool(left)))
    return out


def pseudo_automorphism_companion_check(G: LoopTable) -> bool:
    """Every element is the companion of some right and some left pseudo-automorphism."""
    return all(r and l for r, l in companion_table(G))


def _is_central(G):
    return any(satisfies(G, i) for i in (IdentityId.LC_A, IdentityId.RC_A, IdentityId.C))


def coset_criterion_forms(G: LoopTable):
    """The identity-in-cosets test in its general form and, for C-loops, the nucleus form.

    Returns ``(general, c_form)``; ``c_form`` is None unless ``G`` is a C-loop.
    """
    if not _is_central(G):
        raise NotCentralLoop()
    n, e = G.order, G.identity
    n_rho, n_lam = right_nucleus(G), left_nucleus(G)
    acc = ElementSet.full(n)
    for g in range(n):
        acc = acc & left_coset(G, g, n_rho) & right_coset(G, n_lam, g)
    general = e in acc
    c_form = None
    if satisfies(G, IdentityId.C):
        N = nucleus(G)
        acc = ElementSet.full(n)
        for g in range(n):
            acc = acc & left_coset(G, g, N)
        c_form = e in acc
    return general, c_form


def gloop_coset_criterion(G: LoopTable) -> bool:
    return coset_criterion_forms(G)[0]


def nucleus_transfer_check(G: LoopTable, g) -> bool:
    """Does ``L_g`` carry the right nucleus of G onto that of the left isotope at g?"""
    image = ElementSet((int(G.table[g, a]) for a in right_nucleus(G)), G.order)
    return image == right_nucleus(left_isotope(G, g))
