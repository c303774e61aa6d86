import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsmith import (BadSymbol, NoIdentity, NotLatinColumn, NotLatinRow, Permutation, compose,
                       identity_perm, inverse, left_div, left_translation, make_loop, right_div,
                       right_translation, transpose)
from loopsmith.core import is_latin, relabel

import oracles


def perms(n):
    return st.permutations(range(n)).map(Permutation)


def test_make_loop_detects_identity_away_from_zero():
    # Z3 relabelled so that 2 is neutral
    L = make_loop([[1, 2, 0], [2, 0, 1], [0, 1, 2]])
    assert L.identity == 2
    assert L.order == 3


@pytest.mark.parametrize("rows, exc", [
    ([[0, 1], [1, 2]], BadSymbol),
    ([[0, 1], [-1, 0]], BadSymbol),
    ([[0, 1], [1, 1]], NotLatinRow),
    ([[0, 1, 2], [1, 2, 0], [0, 1, 2]], NotLatinColumn),
    ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], NoIdentity),
])
def test_make_loop_rejects(rows, exc):
    with pytest.raises(exc):
        make_loop(rows)


def test_bad_symbol_reported_before_latin_failure():
    with pytest.raises(BadSymbol) as info:
        make_loop([[0, 0, 2], [1, 2, 9], [2, 0, 1]])
    assert (info.value.row, info.value.col) == (1, 2)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        make_loop([[0, 1], [1, 0], [0, 1]])


def test_tables_are_read_only(z4):
    with pytest.raises(ValueError):
        z4.table[0, 0] = 3


def test_latin_squares_with_identity_match_oracle():
    # every 4x4 Latin square either has an identity or is rejected, never both
    count = 0
    for sq in oracles.latin_squares(4):
        e = oracles.identity_of(sq)
        assert is_latin(sq)
        if e is None:
            with pytest.raises(NoIdentity):
                make_loop(sq)
        else:
            assert make_loop(sq).identity == e
            count += 1
    assert count == 16


def test_divisions(s3):
    n = s3.order
    for x in range(n):
        for y in range(n):
            assert s3.mul(x, left_div(s3, x, y)) == y
            assert s3.mul(right_div(s3, y, x), x) == y


def test_translations_act_on_the_right(s3):
    # y L_x = xy and y R_x = yx
    for x in range(6):
        Lx, Rx = left_translation(s3, x), right_translation(s3, x)
        for y in range(6):
            assert Lx(y) == s3.mul(x, y)
            assert Rx(y) == s3.mul(y, x)


def test_compose_applies_left_factor_first(s3):
    a, b = 1, 2
    # y (L_a L_b) = b(ay)
    p = left_translation(s3, a) * left_translation(s3, b)
    assert all(p(y) == s3.mul(b, s3.mul(a, y)) for y in range(6))


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_permutation_group_laws(ps):
    p, q, r = ps
    n = p.n
    assert (p * q) * r == p * (q * r)
    assert p * ~p == identity_perm(n) == ~p * p
    assert compose(p, identity_perm(n)) == p
    assert inverse(inverse(p)) == p


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_cycle_type():
    p = Permutation([1, 0, 3, 4, 2, 5])
    assert p.cycle_type() == (1, 2, 3)
    assert sorted(map(len, p.cycles())) == [1, 2, 3]


def test_transpose_is_involution(s3):
    assert transpose(transpose(s3)) == s3
    assert transpose(s3) != s3


@settings(max_examples=50)
@given(data=st.data())
def test_relabel_is_isomorphic_copy(data, small_loops):
    L = data.draw(st.sampled_from(small_loops))
    p = data.draw(st.permutations(range(L.order)))
    M = relabel(L, p)
    t, u = L.table, M.table
    p = np.array(p)
    assert (u[p[:, None], p[None, :]] == p[t]).all()
    assert M.identity == p[L.identity]
    assert make_loop(M.rows()) == M


def test_equality_and_hash(z4):
    again = make_loop(z4.rows())
    assert again == z4 and hash(again) == hash(z4)
    assert len({z4, again}) == 1
