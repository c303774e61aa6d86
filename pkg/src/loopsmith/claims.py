"""Executable claims about central loops, replayed over a corpus of small loops.

Each claim is a per-loop check returning *findings*.  For universally
quantified claims a finding is a counterexample; for the existence claim it
is a witness; for observation claims it is a disagreement between two
readings.  Every finding carries enough parameters to be re-verified on its
own by :func:`replay_finding`.
"""
from __future__ import annotations

import enum
import json
import time
import zlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import LoopTable, Permutation, left_translation, right_translation
from .generation import all_loops, structured_corpus
from .identities import IdentityId as I, satisfies
from .isotopy import (RegularKind, c_mu_criterion, isotope_table, lc_autotopism_criterion,
                      left_isotope, principal_isotope, rc_autotopism_criterion,
                      regular_set, right_isotope, universality_witness)
from .morphisms import (companion_table, coset_criterion_forms, gloop_witness,
                        nucleus_membership_criterion, theta_readings)
from .subloops import is_central_square, left_nucleus, right_nucleus

__all__ = ["ClaimId", "ClaimReport", "CLAIMS", "verify_claim", "build_corpus", "replay_finding"]

FACTORIAL_ORDER = 5
MAX_WITNESSES = 10


class ClaimId(enum.Enum):
    LC_AUTO = "lc-auto"
    RC_AUTO = "rc-auto"
    LCRC_LP = "lcrc-lp"
    C_MU = "c-mu"
    ISO_COND = "iso-cond"
    LC_LEFT_ISO = "lc-left-iso"
    LC_LEFT_UNIV = "lc-left-univ"
    LC_UNIV_IFF_RIGHT = "lc-univ-iff-right"
    RC_RIGHT_ISO = "rc-right-iso"
    RC_UNIV_COR = "rc-univ-cor"
    NONUNIV_EXISTS = "nonuniv-exists"
    UNIV_IMPLIES_BOL = "univ-implies-bol"
    EXTRA_REMARK = "extra-remark"
    CSQ_C_LEFT = "csq-c-left"
    CSQ_C_RIGHT = "csq-c-right"
    COMM_C_LEFT = "comm-c-left"
    COMM_C_RIGHT = "comm-c-right"
    REG_SUBGROUP = "reg-subgroup"
    REG_ISO_CARD = "reg-iso-card"
    COSET_LEMMA = "coset-lemma"
    GLOOP_EQUIV = "gloop-equiv"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = name.strip().lower().replace("_", "-")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown claim {name!r}; expected one of "
                             + ", ".join(c.value for c in cls)) from None


# ---------------------------------------------------------------- findings

def _finding(kind, **params):
    return {"kind": kind, "params": params}


def _side_isotope(L, side, a):
    return left_isotope(L, a) if side == "left" else right_isotope(L, a)


def _gloop_side(L, side):
    return gloop_witness(L, side) is None


_CRITERIA = {
    "lc_autotopism": lc_autotopism_criterion,
    "rc_autotopism": rc_autotopism_criterion,
    "c_mu": c_mu_criterion,
}


def _squares_regular(L, side):
    kind = RegularKind.LAMBDA if side == "lambda" else RegularKind.RHO
    members = set(regular_set(L, kind).members)
    trans = left_translation if side == "lambda" else right_translation
    return all(trans(L, x) * trans(L, x) in members for x in range(L.order))


def _iso_cond_sides(L, part, A, B):
    """Both sides of the isotopy/nucleus equivalence for one triple.

    part 1 uses ``(A, B, B)``: is ``A`` an isomorphism, and is ``eB`` in the
    right nucleus of the image.  Part 2 uses ``(A, B, A)``: is ``B`` an
    isomorphism, and is ``eA`` in the left nucleus.
    """
    A, B = np.asarray(A), np.asarray(B)
    e = L.identity
    if part == 1:
        h = isotope_table(L, A, B, B)
        iso = bool((h[A[:, None], A[None, :]] == A[L.table]).all())
        return iso, int(B[e]) in right_nucleus(h)
    h = isotope_table(L, A, B, A)
    iso = bool((h[B[:, None], B[None, :]] == B[L.table]).all())
    return iso, int(A[e]) in left_nucleus(h)


def _gloop_iff(L, lc_side):
    """G-loop versus (G_rho and nucleus LEFT) for LC; dual for RC."""
    direct = gloop_witness(L, "both") is None
    if lc_side:
        return direct, _gloop_side(L, "right") and nucleus_membership_criterion(L, "LEFT")
    return direct, _gloop_side(L, "left") and nucleus_membership_criterion(L, "RIGHT")


def _verify(L: LoopTable, kind, p) -> bool:
    """Re-establish one finding from scratch; True when it is confirmed."""
    if kind == "criterion_mismatch":
        return satisfies(L, p["identity"]) != _CRITERIA[p["criterion"]](L)
    if kind == "regular_square_mismatch":
        ident = I.LC_A if p["side"] == "lambda" else I.RC_A
        return satisfies(L, ident) != _squares_regular(L, p["side"])
    if kind == "iso_nucleus_mismatch":
        iso, member = _iso_cond_sides(L, p["part"], p["A"], p["B"])
        return iso != member
    if kind == "isotope_identity_mismatch":
        H = _side_isotope(L, p["side"], p["param"])
        return satisfies(L, p["identity"]) != satisfies(H, p["identity"])
    if kind == "gloop_side_vs_nucleus":
        side = "left" if p["criterion"] == "LEFT" else "right"
        return _gloop_side(L, side) != nucleus_membership_criterion(L, p["criterion"])
    if kind == "isotope_fails":
        H = principal_isotope(L, p["f"], p["g"])
        return satisfies(L, p["identity"]) and not satisfies(H, p["identity"])
    if kind == "universal_iff_mismatch":
        full = universality_witness(L, p["identity"], "both") is None
        one = universality_witness(L, p["identity"], p["side"]) is None
        return full != one
    if kind == "gloop_iff_mismatch":
        a, b = _gloop_iff(L, p["lc"])
        return a != b
    if kind == "universal_not_bol":
        return (universality_witness(L, p["identity"], "both") is None
                and not satisfies(L, p["bol"]))
    if kind == "extra_not_c_moufang":
        return satisfies(L, I.EXTRA) and not (satisfies(L, I.C) and satisfies(L, I.MOUFANG))
    if kind == "csq_isotope_not_c":
        H = _side_isotope(L, p["side"], p["param"])
        return (satisfies(L, I.C) and is_central_square(L) and satisfies(H, I.ALT)
                and is_central_square(H) and not satisfies(H, I.C))
    if kind == "comm_c_mismatch":
        H = _side_isotope(L, p["side"], p["param"])
        return (L.is_commutative() and H.is_commutative()
                and satisfies(L, I.C) != satisfies(H, I.C))
    if kind == "regular_not_subgroup":
        return not _is_subgroup(regular_set(L, RegularKind(p["regular"])).members, L.order)
    if kind == "regular_card_mismatch":
        H = principal_isotope(L, p["f"], p["g"])
        return _regular_sizes(L) != _regular_sizes(H)
    if kind == "coset_disagreement":
        general, c_form = coset_criterion_forms(L)
        direct = gloop_witness(L, "both") is None
        value = general if p["form"] == "general" else c_form
        return value != direct
    if kind == "gloop_disagreement":
        direct = gloop_witness(L, "both") is None
        if p["against"] == "wilson":
            other = _gloop_side(L, "left") and _gloop_side(L, "right")
        else:
            other = theta_readings(L)[1]
        return direct != other
    raise ValueError(f"unknown finding kind {kind!r}")


def replay_finding(L: LoopTable, finding) -> bool:
    return _verify(L, finding["kind"], finding["params"])


# ---------------------------------------------------------------- checks

def _check_lc_auto(L):
    out = []
    if satisfies(L, I.LC_A) != lc_autotopism_criterion(L):
        out.append(_finding("criterion_mismatch", identity="lc", criterion="lc_autotopism"))
    tally = {"lc_loops": int(satisfies(L, I.LC_A)),
             "lc_a_vs_lc_b_disagree": int(satisfies(L, I.LC_A) != satisfies(L, I.LC_B))}
    return out, tally


def _check_rc_auto(L):
    out = []
    if satisfies(L, I.RC_A) != rc_autotopism_criterion(L):
        out.append(_finding("criterion_mismatch", identity="rc", criterion="rc_autotopism"))
    tally = {"rc_loops": int(satisfies(L, I.RC_A)),
             "rc_a_vs_rc_b_disagree": int(satisfies(L, I.RC_A) != satisfies(L, I.RC_B))}
    return out, tally


def _check_lcrc_lp(L):
    out = []
    for side, ident in (("lambda", I.LC_A), ("rho", I.RC_A)):
        if satisfies(L, ident) != _squares_regular(L, side):
            out.append(_finding("regular_square_mismatch", side=side))
    return out, {"lc_loops": int(satisfies(L, I.LC_A)), "rc_loops": int(satisfies(L, I.RC_A))}


def _check_c_mu(L):
    out = []
    c = satisfies(L, I.C)
    if c != c_mu_criterion(L):
        out.append(_finding("criterion_mismatch", identity="c", criterion="c_mu"))
    lcrc = satisfies(L, I.LC_A) and satisfies(L, I.RC_A)
    tally = {"c_loops": int(c), f"lc_and_rc={int(lcrc)},c={int(c)}": 1}
    return out, tally


def _seeded_rng(L, salt):
    return np.random.default_rng([zlib.crc32(L.table.tobytes()), L.order, salt])


def _check_iso_cond(L, samples=4):
    n = L.order
    ident = list(range(n))
    triples = []
    for g in range(n):
        triples.append((1, L.table[:, g].tolist(), ident))          # (R_g, I, I)
    for f in range(n):
        triples.append((2, ident, L.table[f, :].tolist()))          # (I, L_f, I)
    rng = _seeded_rng(L, 12)
    for part in (1, 2):
        for _ in range(samples):
            triples.append((part, rng.permutation(n).tolist(), rng.permutation(n).tolist()))
    out = []
    tally = Counter()
    for part, A, B in triples:
        iso, member = _iso_cond_sides(L, part, A, B)
        tally[f"part{part}_iso={int(iso)}"] += 1
        if iso != member:
            out.append(_finding("iso_nucleus_mismatch", part=part, A=A, B=B))
    return out, dict(tally)


def _isotope_transfer(L, side, ident):
    out = []
    base = satisfies(L, ident)
    for a in range(L.order):
        H = _side_isotope(L, side, a)
        if satisfies(H, ident) != base:
            out.append(_finding("isotope_identity_mismatch", side=side, param=a,
                                identity=ident.value))
    return out


def _nucleus_part(L, criterion):
    side = "left" if criterion == "LEFT" else "right"
    g_side = _gloop_side(L, side)
    member = nucleus_membership_criterion(L, criterion)
    tally = {f"g_{side}={int(g_side)},criterion={int(member)}": 1}
    if g_side != member:
        return [_finding("gloop_side_vs_nucleus", criterion=criterion)], tally
    return [], tally


def _check_lc_left_iso(L):
    out = _isotope_transfer(L, "left", I.LC_A)
    tally = {}
    if satisfies(L, I.LC_A):
        more, tally = _nucleus_part(L, "LEFT")
        out += more
    return out, tally


def _check_rc_right_iso(L):
    out = _isotope_transfer(L, "right", I.RC_A)
    tally = {}
    if satisfies(L, I.RC_A):
        more, tally = _nucleus_part(L, "RIGHT")
        out += more
    return out, tally


def _check_one_sided_universal(L, ident, side):
    if not satisfies(L, ident):
        return [], {}
    w = universality_witness(L, ident, side)
    if w is None:
        return [], {"members": 1}
    return [_finding("isotope_fails", identity=ident.value, f=w[0], g=w[1])], {"members": 1}


def _check_lc_left_univ(L):
    return _check_one_sided_universal(L, I.LC_A, "left")


def _check_lc_univ_iff_right(L):
    if not satisfies(L, I.LC_A):
        return [], {}
    out = []
    full = universality_witness(L, I.LC_A, "both") is None
    right = universality_witness(L, I.LC_A, "right") is None
    if full != right:
        out.append(_finding("universal_iff_mismatch", identity="lc", side="right"))
    a, b = _gloop_iff(L, True)
    if a != b:
        out.append(_finding("gloop_iff_mismatch", lc=True))
    return out, {"lc_loops": 1, f"universal={int(full)}": 1, f"gloop={int(a)}": 1}


def _check_rc_univ_cor(L):
    if not satisfies(L, I.RC_A):
        return [], {}
    out = []
    left_w = universality_witness(L, I.RC_A, "left")
    right_w = universality_witness(L, I.RC_A, "right")
    full = universality_witness(L, I.RC_A, "both") is None
    if right_w is not None:
        out.append(_finding("isotope_fails", identity="rc", f=right_w[0], g=right_w[1]))
    if full != (left_w is None):
        out.append(_finding("universal_iff_mismatch", identity="rc", side="left"))
    a, b = _gloop_iff(L, False)
    if a != b:
        out.append(_finding("gloop_iff_mismatch", lc=False))
    tally = {
        "rc_loops": 1,
        "literal_reading_left_universal": int(left_w is None),
        "dual_reading_right_universal": int(right_w is None),
    }
    return out, tally


def _check_nonuniv(L):
    out = []
    tally = {}
    for ident in (I.LC_A, I.RC_A, I.C):
        if satisfies(L, ident):
            tally[f"{ident.value}_loops"] = 1
            w = universality_witness(L, ident, "both")
            if w is not None:
                tally[f"{ident.value}_nonuniversal"] = 1
                out.append(_finding("isotope_fails", identity=ident.value, f=w[0], g=w[1]))
    return out, tally


def _check_univ_bol(L):
    out = []
    tally = {}
    for ident, bol in ((I.RC_A, I.RIGHT_BOL), (I.LC_A, I.LEFT_BOL), (I.C, I.MOUFANG)):
        if satisfies(L, ident) and universality_witness(L, ident, "both") is None:
            tally[f"universal_{ident.value}"] = 1
            if not satisfies(L, bol):
                out.append(_finding("universal_not_bol", identity=ident.value, bol=bol.value))
    return out, tally


def _check_extra(L):
    if not satisfies(L, I.EXTRA):
        return [], {}
    if not (satisfies(L, I.C) and satisfies(L, I.MOUFANG)):
        return [_finding("extra_not_c_moufang")], {"extra_loops": 1}
    return [], {"extra_loops": 1}


def _check_csq(L, side):
    if not (satisfies(L, I.C) and is_central_square(L)):
        return [], {}
    out = []
    tally = Counter({"central_square_c_loops": 1})
    for a in range(L.order):
        H = _side_isotope(L, side, a)
        if satisfies(H, I.ALT) and is_central_square(H):
            tally["qualifying_isotopes"] += 1
            if not satisfies(H, I.C):
                out.append(_finding("csq_isotope_not_c", side=side, param=a))
    more, t2 = _nucleus_part(L, "LEFT" if side == "left" else "RIGHT")
    tally.update(t2)
    return out + more, dict(tally)


def _check_comm(L, side):
    if not L.is_commutative():
        return [], {}
    out = []
    tally = Counter({"commutative_loops": 1})
    for a in range(L.order):
        H = _side_isotope(L, side, a)
        if H.is_commutative():
            tally["commutative_isotopes"] += 1
            if satisfies(L, I.C) != satisfies(H, I.C):
                out.append(_finding("comm_c_mismatch", side=side, param=a))
    if satisfies(L, I.C):
        more, t2 = _nucleus_part(L, "LEFT" if side == "left" else "RIGHT")
        out += more
        tally.update(t2)
    return out, dict(tally)


def _is_subgroup(members, n):
    s = set(members)
    ident = Permutation._trusted(range(n))
    if not s or ident not in s:
        return False
    return all(~p in s for p in s) and all(p * q in s for p in s for q in s)


def _regular_sizes(L):
    mu = regular_set(L, RegularKind.MU)
    return (len(regular_set(L, RegularKind.LAMBDA)), len(regular_set(L, RegularKind.RHO)),
            len(mu), len(set(mu.adjoints)))


def _check_reg_subgroup(L):
    out = []
    for kind in RegularKind:
        if not _is_subgroup(regular_set(L, kind).members, L.order):
            out.append(_finding("regular_not_subgroup", regular=kind.value))
    return out, {"loops": 1}


def _check_reg_card(L):
    out = []
    base = _regular_sizes(L)
    for f in range(L.order):
        for g in range(L.order):
            if _regular_sizes(principal_isotope(L, f, g)) != base:
                out.append(_finding("regular_card_mismatch", f=f, g=g))
    return out, {"isotopic_pairs": L.order ** 2}


def _is_central_loop(L):
    return any(satisfies(L, i) for i in (I.LC_A, I.RC_A, I.C))


def _check_coset(L):
    if not _is_central_loop(L):
        return [], {}
    general, c_form = coset_criterion_forms(L)
    direct = gloop_witness(L, "both") is None
    out = []
    tally = {"central_loops": 1, f"general={int(general)},gloop={int(direct)}": 1}
    if general != direct:
        out.append(_finding("coset_disagreement", form="general"))
    if c_form is not None:
        tally[f"c_loop:nucleus_form={int(c_form)},gloop={int(direct)}"] = 1
        if c_form != direct:
            out.append(_finding("coset_disagreement", form="c_loop"))
    return out, tally


def _check_gloop_equiv(L):
    direct = gloop_witness(L, "both") is None
    wilson = _gloop_side(L, "left") and _gloop_side(L, "right")
    single, per_pair = theta_readings(L)
    comp = companion_table(L)
    companion = all(r and l for r, l in comp)
    out = []
    if direct != wilson:
        out.append(_finding("gloop_disagreement", against="wilson"))
    if direct != per_pair:
        out.append(_finding("gloop_disagreement", against="theta_per_pair"))
    tally = {
        f"direct={int(direct)}": 1,
        f"direct={int(direct)},theta_single={int(single)}": 1,
        f"direct={int(direct)},companion={int(companion)}": 1,
    }
    return out, tally


# ---------------------------------------------------------------- registry

UNIVERSAL, EXISTENTIAL, OBSERVATION = "universal", "existential", "observation"


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    statement: str
    check: Callable
    mode: str = UNIVERSAL
    factorial: bool = False
    structured_cap: int = 20


def _c(cid, statement, check, **kw):
    return cid, Claim(cid, statement, check, **kw)


CLAIMS = dict([
    _c(ClaimId.LC_AUTO, "L is LC iff (L_x^2, I, L_x^2) is an autotopism for all x", _check_lc_auto),
    _c(ClaimId.RC_AUTO, "L is RC iff (I, R_x^2, R_x^2) is an autotopism for all x", _check_rc_auto),
    _c(ClaimId.LCRC_LP, "L is LC (RC) iff every L_x^2 (R_x^2) is lambda- (rho-) regular",
       _check_lcrc_lp, factorial=True, structured_cap=FACTORIAL_ORDER),
    _c(ClaimId.C_MU, "L is C iff R_x^2 is mu-regular with adjoint L_x^2 for all x", _check_c_mu),
    _c(ClaimId.ISO_COND, "(A,B,B): A is an isomorphism iff eB in N_rho(H); (A,B,A): B is one iff eA in N_lambda(H)",
       _check_iso_cond),
    _c(ClaimId.LC_LEFT_ISO, "G is LC iff its left isotope H is LC; an LC-loop is G_lambda iff e in N_rho(H) for every left isotope",
       _check_lc_left_iso, structured_cap=10),
    _c(ClaimId.LC_LEFT_UNIV, "every LC-loop is left universal", _check_lc_left_univ),
    _c(ClaimId.LC_UNIV_IFF_RIGHT, "an LC-loop is universal iff right universal; G-loop iff G_rho and e in N_rho of all left isotopes",
       _check_lc_univ_iff_right, structured_cap=10),
    _c(ClaimId.RC_RIGHT_ISO, "G is RC iff its right isotope H is RC; an RC-loop is G_rho iff e in N_lambda(H) for every right isotope",
       _check_rc_right_iso, structured_cap=10),
    _c(ClaimId.RC_UNIV_COR, "an RC-loop is one-sided universal (literal: left, dual: right); universal iff left universal; G-loop iff G_lambda and e in N_lambda of all right isotopes",
       _check_rc_univ_cor, structured_cap=10),
    _c(ClaimId.NONUNIV_EXISTS, "some LC-, RC- and C-loops are not universal", _check_nonuniv,
       mode=EXISTENTIAL),
    _c(ClaimId.UNIV_IMPLIES_BOL, "a universal RC (LC, C) loop is right Bol (left Bol, Moufang)", _check_univ_bol),
    _c(ClaimId.EXTRA_REMARK, "an extra loop is a C-loop and a Moufang loop", _check_extra),
    _c(ClaimId.CSQ_C_LEFT, "central square C-loop G: an alternative central square left isotope is C; G_lambda iff nucleus criterion",
       lambda L: _check_csq(L, "left"), structured_cap=10),
    _c(ClaimId.CSQ_C_RIGHT, "central square C-loop G: an alternative central square right isotope is C; G_rho iff nucleus criterion",
       lambda L: _check_csq(L, "right"), structured_cap=10),
    _c(ClaimId.COMM_C_LEFT, "commutative G and commutative left isotope H: G is C iff H is C; G_lambda iff nucleus criterion",
       lambda L: _check_comm(L, "left"), structured_cap=10),
    _c(ClaimId.COMM_C_RIGHT, "commutative G and commutative right isotope H: G is C iff H is C; G_rho iff nucleus criterion",
       lambda L: _check_comm(L, "right"), structured_cap=10),
    _c(ClaimId.REG_SUBGROUP, "Lambda, P and Phi are subgroups", _check_reg_subgroup,
       factorial=True, structured_cap=FACTORIAL_ORDER),
    _c(ClaimId.REG_ISO_CARD, "isotopic loops have equal |Lambda|, |P|, |Phi|, |Phi*|", _check_reg_card,
       factorial=True, structured_cap=FACTORIAL_ORDER),
    _c(ClaimId.COSET_LEMMA, "a central loop is a G-loop iff e lies in the intersection of the nucleus cosets",
       _check_coset, mode=OBSERVATION, structured_cap=10),
    _c(ClaimId.GLOOP_EQUIV, "G-loop characterizations agree: direct, Wilson, theta, companions",
       _check_gloop_equiv, factorial=True, structured_cap=FACTORIAL_ORDER),
])


# ---------------------------------------------------------------- corpus

@dataclass(frozen=True)
class CorpusItem:
    label: str
    loop: LoopTable


def build_corpus(max_order=6, structured=True, structured_cap=20, factorial=False):
    """Exhaustive normalized loops up to ``max_order`` plus the structured loops."""
    top = min(max_order, FACTORIAL_ORDER) if factorial else max_order
    items = []
    for n in range(1, top + 1):
        items.extend(CorpusItem(f"n{n}#{k}", L) for k, L in enumerate(all_loops(n)))
    if structured:
        cap = min(structured_cap, FACTORIAL_ORDER) if factorial else structured_cap
        items.extend(CorpusItem(label, L) for label, L in structured_corpus() if L.order <= cap)
    return items, {"exhaustive_max_order": top, "structured": structured,
                   "structured_max_order": structured_cap if structured else None,
                   "loops": len(items)}


# ---------------------------------------------------------------- reports

@dataclass
class ClaimReport:
    claim: ClaimId
    verdict: str
    expected: bool
    corpus: dict
    witnesses: list
    witness_count: int
    observations: dict
    statement: str = ""
    elapsed_ms: float | None = field(default=None, compare=False)

    def to_json(self, timings=False):
        doc = {
            "claim": self.claim.value,
            "statement": self.statement,
            "verdict": self.verdict,
            "expected": self.expected,
            "corpus": self.corpus,
            "witnesses": self.witnesses,
            "witness_count": self.witness_count,
            "observations": self.observations,
            "elapsed_ms": round(self.elapsed_ms, 1) if timings and self.elapsed_ms is not None else None,
        }
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_text(self, timings=False):
        lines = [f"{self.claim.value}: {self.verdict}" + ("" if self.expected else "  <-- UNEXPECTED"),
                 f"  claim: {self.statement}",
                 f"  corpus: {self.corpus['loops']} loops (exhaustive n <= {self.corpus['exhaustive_max_order']})"]
        for key in sorted(self.observations):
            lines.append(f"  {key}: {self.observations[key]}")
        if self.witness_count:
            lines.append(f"  findings: {self.witness_count} (showing {len(self.witnesses)})")
            for w in self.witnesses:
                lines.append(f"    {w['loop']}: {w['kind']} {json.dumps(w['params'], sort_keys=True)}")
        if timings and self.elapsed_ms is not None:
            lines.append(f"  elapsed: {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)

    def verify_witnesses(self):
        """Replay every embedded witness in isolation."""
        from .core import make_loop
        return all(replay_finding(make_loop(w["table"]), w) for w in self.witnesses)


def _evaluate(args):
    cid, item = args
    findings, tally = CLAIMS[cid].check(item.loop)
    return item, findings, tally


def _verdict(mode, count):
    if mode == UNIVERSAL:
        return ("HOLDS", True) if count == 0 else ("WITNESS_FOUND", False)
    if mode == EXISTENTIAL:
        return ("WITNESS_FOUND", True) if count else ("OBSERVATION", False)
    return ("HOLDS", True) if count == 0 else ("OBSERVATION", True)


def verify_claim(cid, max_order=6, corpus=None, workers=1, structured=True) -> ClaimReport:
    """Replay one claim over a corpus and reduce the per-loop results.

    ``corpus`` may be a list of ``(label, loop)`` pairs; otherwise the default
    corpus is built.  The report does not depend on ``workers``.
    """
    cid = ClaimId.parse(cid)
    claim = CLAIMS[cid]
    start = time.perf_counter()
    if corpus is None:
        items, desc = build_corpus(max_order, structured, claim.structured_cap, claim.factorial)
    else:
        items = [CorpusItem(label, L) for label, L in corpus]
        desc = {"exhaustive_max_order": None, "structured": False,
                "structured_max_order": None, "loops": len(items)}
    jobs = [(cid, item) for item in items]
    if workers > 1 and len(jobs) > 1:
        chunk = max(1, len(jobs) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=chunk))
    else:
        results = [_evaluate(j) for j in jobs]

    # the first finding of each kind/identity comes first, then corpus order
    flat, tally = [], Counter()
    for item, findings, t in results:
        tally.update(t)
        flat.extend({"loop": item.label, "table": item.loop.rows(), **f} for f in findings)
    count = len(flat)
    firsts, seen = [], set()
    for i, w in enumerate(flat):
        key = (w["kind"], w["params"].get("identity"))
        if key not in seen:
            seen.add(key)
            firsts.append(i)
    chosen = sorted(firsts[:MAX_WITNESSES])
    rest = [i for i in range(count) if i not in set(chosen)]
    chosen = sorted(chosen + rest[:MAX_WITNESSES - len(chosen)])
    witnesses = [flat[i] for i in chosen]
    verdict, expected = _verdict(claim.mode, count)
    if cid is ClaimId.NONUNIV_EXISTS:
        expected = all(tally.get(f"{t}_nonuniversal", 0) for t in ("lc", "rc", "c"))
    observations = dict(sorted(tally.items()))
    if cid is ClaimId.RC_UNIV_COR:
        members = tally.get("rc_loops", 0)
        observations["supported_reading"] = (
            "dual (right universal)" if tally.get("dual_reading_right_universal", 0) == members
            else "neither")
        if tally.get("literal_reading_left_universal", 0) == members:
            observations["supported_reading"] += "; literal also holds"
    report = ClaimReport(cid, verdict, expected, desc, witnesses, count, observations,
                         claim.statement)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
