"""Loop identities of Bol-Moufang type and their neighbours.

Every law is a closed equation in at most three variables ``x, y, z`` and is
decided by a full scan of the Cayley table.
"""
from __future__ import annotations

import enum

import numpy as np

from .core import LoopTable

__all__ = ["IdentityId", "satisfies", "failing_witness", "classify", "holds_on_table"]


class IdentityId(enum.Enum):
    LC_A = "lc"
    LC_B = "lc-b"
    RC_A = "rc"
    RC_B = "rc-b"
    C = "c"
    LEFT_BOL = "left-bol"
    RIGHT_BOL = "right-bol"
    MOUFANG = "moufang"
    EXTRA = "extra"
    LEFT_ALT = "left-alt"
    RIGHT_ALT = "right-alt"
    ALT = "alt"
    FLEXIBLE = "flexible"
    COMMUTATIVE = "comm"
    ASSOCIATIVE = "assoc"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            try:
                return cls[name.strip().upper()]
            except KeyError:
                raise ValueError(f"unknown identity {name!r}; expected one of "
                                 + ", ".join(i.value for i in cls)) from None

    def __str__(self):
        return self.value


# (arity, lhs, rhs) with m(a, b) the loop product on index arrays.
_LAWS = {
    "lc_a": (3, lambda m, x, y, z: m(m(x, x), m(y, z)), lambda m, x, y, z: m(m(x, m(x, y)), z)),
    "lc_b": (3, lambda m, x, y, z: m(m(x, m(x, y)), z), lambda m, x, y, z: m(x, m(x, m(y, z)))),
    "rc_a": (3, lambda m, x, y, z: m(m(z, y), m(x, x)), lambda m, x, y, z: m(z, m(m(y, x), x))),
    "rc_b": (3, lambda m, x, y, z: m(z, m(m(y, x), x)), lambda m, x, y, z: m(m(m(z, y), x), x)),
    "c": (3, lambda m, x, y, z: m(x, m(y, m(y, z))), lambda m, x, y, z: m(m(m(x, y), y), z)),
    "left_bol": (3, lambda m, x, y, z: m(x, m(y, m(x, z))), lambda m, x, y, z: m(m(x, m(y, x)), z)),
    "right_bol": (3, lambda m, x, y, z: m(m(m(z, x), y), x), lambda m, x, y, z: m(z, m(m(x, y), x))),
    "moufang": (3, lambda m, x, y, z: m(m(x, y), m(z, x)), lambda m, x, y, z: m(m(x, m(y, z)), x)),
    "extra": (3, lambda m, x, y, z: m(x, m(y, m(z, x))), lambda m, x, y, z: m(m(m(x, y), z), x)),
    "left_alt": (2, lambda m, x, y, z: m(x, m(x, y)), lambda m, x, y, z: m(m(x, x), y)),
    "right_alt": (2, lambda m, x, y, z: m(m(y, x), x), lambda m, x, y, z: m(y, m(x, x))),
    "flexible": (2, lambda m, x, y, z: m(x, m(y, x)), lambda m, x, y, z: m(m(x, y), x)),
    "comm": (2, lambda m, x, y, z: m(x, y), lambda m, x, y, z: m(y, x)),
    "assoc": (3, lambda m, x, y, z: m(m(x, y), z), lambda m, x, y, z: m(x, m(y, z))),
}

_EQUATIONS = {
    IdentityId.LC_A: ("lc_a",),
    IdentityId.LC_B: ("lc_b",),
    IdentityId.RC_A: ("rc_a",),
    IdentityId.RC_B: ("rc_b",),
    IdentityId.C: ("c",),
    IdentityId.LEFT_BOL: ("left_bol",),
    IdentityId.RIGHT_BOL: ("right_bol",),
    IdentityId.MOUFANG: ("moufang",),
    IdentityId.EXTRA: ("extra",),
    IdentityId.LEFT_ALT: ("left_alt",),
    IdentityId.RIGHT_ALT: ("right_alt",),
    IdentityId.ALT: ("left_alt", "right_alt"),
    IdentityId.FLEXIBLE: ("flexible",),
    IdentityId.COMMUTATIVE: ("comm",),
    IdentityId.ASSOCIATIVE: ("assoc",),
}


def _violations(t, law):
    arity, lhs, rhs = _LAWS[law]
    n = t.shape[0]
    m = lambda a, b: t[a, b]  # noqa: E731
    if arity == 3:
        x, y, z = np.ix_(np.arange(n), np.arange(n), np.arange(n))
    else:
        x, y = np.ix_(np.arange(n), np.arange(n))
        z = None
    return lhs(m, x, y, z) != rhs(m, x, y, z)


def holds_on_table(t, identity) -> bool:
    """Decide a law on a bare table (quasigroups included)."""
    t = np.asarray(t)
    return not any(_violations(t, law).any() for law in _EQUATIONS[IdentityId.parse(identity)])


def satisfies(L: LoopTable, identity) -> bool:
    return holds_on_table(L.table, identity)


def failing_witness(L: LoopTable, identity):
    """Lexicographically first ``(x, y[, z])`` violating the law, or None."""
    for law in _EQUATIONS[IdentityId.parse(identity)]:
        bad = _violations(L.table, law)
        if bad.any():
            return tuple(int(i) for i in np.argwhere(bad)[0])
    return None


def check_assignment(L: LoopTable, identity, assignment) -> bool:
    """Evaluate the law at one variable assignment (used to replay witnesses)."""
    m = lambda a, b: int(L.table[a, b])  # noqa: E731
    vals = list(assignment) + [0] * (3 - len(assignment))
    for law in _EQUATIONS[IdentityId.parse(identity)]:
        _, lhs, rhs = _LAWS[law]
        if lhs(m, *vals) != rhs(m, *vals):
            return False
    return True


def classify(L: LoopTable) -> frozenset:
    return frozenset(i for i in IdentityId if satisfies(L, i))
