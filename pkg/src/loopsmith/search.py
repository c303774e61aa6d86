"""Counterexample search over generated and structured loops."""
from __future__ import annotations

from dataclasses import dataclass

from .core import LoopTable
from .filters import parse_filter
from .generation import all_loops, structured_corpus
from .isotopy import principal_isotope, universality_witness
from .morphisms import find_isomorphism, gloop_witness

__all__ = ["SearchWitness", "search_counterexample", "TARGETS"]

TARGETS = ("NOT_UNIVERSAL", "NOT_GLOOP")


@dataclass(frozen=True)
class SearchWitness:
    label: str
    loop: LoopTable
    f: int
    g: int
    target: str

    def verify(self, prop) -> bool:
        flt = parse_filter(prop)
        H = principal_isotope(self.loop, self.f, self.g)
        if not flt(self.loop):
            return False
        if self.target == "NOT_UNIVERSAL":
            return not flt(H)
        return find_isomorphism(self.loop, H) is None


def _scope_items(order_max, corpus):
    if corpus in ("exhaustive", "all"):
        for n in range(1, order_max + 1):
            for k, L in enumerate(all_loops(n)):
                yield f"n{n}#{k}", L
    if corpus in ("structured", "all"):
        for label, L in structured_corpus():
            if L.order <= max(order_max, 0) or corpus == "structured":
                yield label, L


def search_counterexample(prop, order_max, target="NOT_UNIVERSAL", corpus="exhaustive", loops=None):
    """First loop satisfying ``prop`` that is not universal for it (or not a G-loop).

    Loops are visited in a fixed order: by order, then lexicographically;
    ``loops`` may supply an explicit ``(label, loop)`` sequence instead.
    """
    target = target.upper().replace("-", "_")
    if target not in TARGETS:
        raise ValueError(f"target must be one of {', '.join(TARGETS)}")
    flt = parse_filter(prop)
    items = loops if loops is not None else _scope_items(order_max, corpus)
    for label, L in items:
        if not flt(L):
            continue
        if target == "NOT_UNIVERSAL":
            w = universality_witness(L, flt, "both")
        else:
            w = gloop_witness(L, "both")
        if w is not None:
            return SearchWitness(label, L, w[0], w[1], target)
    return None
