import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsmith import (IdentityId, IsotopismTriple, OrderTooLarge, Permutation, RegularKind,
                       autotopism_group, cyclic_group, is_autotopism, is_isotopism,
                       is_left_universal, is_right_universal, is_universal, left_isotope,
                       make_loop, principal_isotope, regular_set, right_isotope, satisfies)
from loopsmith.isotopy import (c_mu_criterion, is_mu_pair, isotope_table,
                               lc_autotopism_criterion, rc_autotopism_criterion,
                               translation_transfer_check, universality_witness)

import oracles


def triples(found):
    return sorted((t.U.image, t.V.image, t.W.image) for t in found)


def test_principal_isotope_of_z4(z4):
    H = principal_isotope(z4, 1, 1)
    assert H.identity == 2
    assert make_loop(H.rows()) == H
    # an isotope of an abelian group is isomorphic to it; here x o y = x + y - 2
    assert H.rows() == [[(x + y - 2) % 4 for y in range(4)] for x in range(4)]


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_principal_isotope_matches_oracle(data, loops_le6):
    L = data.draw(st.sampled_from(loops_le6))
    f = data.draw(st.integers(0, L.order - 1))
    g = data.draw(st.integers(0, L.order - 1))
    H = principal_isotope(L, f, g)
    assert H.rows() == oracles.principal_isotope(L.rows(), f, g)
    assert H.identity == L.mul(f, g)
    A = Permutation(L.table[:, g])
    B = Permutation(L.table[f, :])
    assert is_isotopism(L, H, IsotopismTriple(A, B, Permutation(range(L.order))))


def test_left_and_right_isotopes(s3):
    assert left_isotope(s3, 3) == principal_isotope(s3, 0, 3)
    assert right_isotope(s3, 4) == principal_isotope(s3, 4, 0)


def test_isotope_table_inverts_isotopism(s3):
    A, B = s3.table[:, 2], s3.table[1, :]
    h = isotope_table(s3, A, B, np.arange(6))
    assert (h == principal_isotope(s3, 1, 2).table).all()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_autotopisms_match_full_brute_force(n):
    for L in [cyclic_group(n)]:
        assert triples(autotopism_group(L)) == sorted(oracles.autotopisms_brute(L.rows()))


def test_z2_has_four_autotopisms():
    assert len(autotopism_group(cyclic_group(2))) == 4


def test_autotopisms_match_pair_oracle(small_loops):
    for L in small_loops:
        if L.order > 4:
            continue
        assert triples(autotopism_group(L)) == sorted(oracles.autotopisms_by_pairs(L.rows()))


def test_autotopisms_match_pair_oracle_order5(small_loops):
    five = [L for L in small_loops if L.order == 5]
    for L in five[:3] + five[-2:]:
        assert triples(autotopism_group(L)) == sorted(oracles.autotopisms_by_pairs(L.rows()))


def test_autotopism_group_is_closed(small_loops):
    for L in small_loops[::6]:
        group = autotopism_group(L)
        members = set(group)
        for t in group[:6]:
            assert ~t in members
            for s in group[:6]:
                assert t * s in members
        assert all(is_autotopism(L, t) for t in group)


def test_autotopism_cardinality_is_isotopy_invariant(small_loops):
    for L in small_loops[::4]:
        H = principal_isotope(L, L.order - 1, L.order // 2)
        assert len(autotopism_group(L)) == len(autotopism_group(H))


@pytest.mark.parametrize("kind", ["lambda", "rho", "mu"])
def test_regular_sets_match_oracle(kind, small_loops):
    for L in small_loops:
        if L.order == 5 and kind == "mu":
            continue
        got = sorted(p.image for p in regular_set(L, kind).members)
        assert got == sorted(oracles.regular_brute(L.rows(), kind))


def test_mu_adjoints(s3):
    reg = regular_set(s3, RegularKind.MU)
    assert len(reg.adjoints) == len(reg.members)
    for U, V in zip(reg.members, reg.adjoints):
        assert is_mu_pair(s3, U, V)


def test_regular_sets_contain_identity(small_loops):
    for L in small_loops:
        ident = Permutation(range(L.order))
        for kind in RegularKind:
            assert ident in regular_set(L, kind)


def test_cap_enforced(monkeypatch):
    monkeypatch.setenv("LOOPSMITH_MAX_ORDER", "3")
    with pytest.raises(OrderTooLarge):
        regular_set(cyclic_group(4), "lambda")
    with pytest.raises(OrderTooLarge):
        autotopism_group(cyclic_group(4))


def test_autotopism_criteria_agree_with_identities(small_loops):
    for L in small_loops:
        assert lc_autotopism_criterion(L) == satisfies(L, IdentityId.LC_A)
        assert rc_autotopism_criterion(L) == satisfies(L, IdentityId.RC_A)
        assert c_mu_criterion(L) == satisfies(L, IdentityId.C)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_translation_transfer(data, loops_le6):
    L = data.draw(st.sampled_from(loops_le6))
    f = data.draw(st.integers(0, L.order - 1))
    g = data.draw(st.integers(0, L.order - 1))
    assert translation_transfer_check(L, f, g)


def test_universality(z4, steiner10):
    assert is_universal(z4, "assoc")
    assert is_left_universal(steiner10, IdentityId.LC_A)
    assert is_right_universal(steiner10, IdentityId.RC_A)
    w = universality_witness(steiner10, "c")
    assert w is not None
    assert not satisfies(principal_isotope(steiner10, *w), "c")


def test_universality_side_validation(z4):
    with pytest.raises(ValueError):
        universality_witness(z4, "c", side="middle")
