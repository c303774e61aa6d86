import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsmith import (ElementSet, center, centrum, left_nucleus, middle_nucleus, nucleus,
                       right_nucleus)
from loopsmith.subloops import (is_central_square, is_centrum_square, is_subloop, left_coset,
                                right_coset)

import oracles


def test_element_set_basics():
    s = ElementSet([0, 2], 4)
    assert 2 in s and 1 not in s
    assert len(s) == 2
    assert list(s) == [0, 2]
    assert s == {0, 2}
    assert s & ElementSet([2, 3], 4) == {2}
    assert s | ElementSet([3], 4) == {0, 2, 3}
    assert ElementSet.full(3).is_full()


def test_nuclei_match_oracle(small_loops):
    for L in small_loops:
        left, right, middle, cent = oracles.nucleus_sets(L.rows())
        assert left_nucleus(L) == left
        assert right_nucleus(L) == right
        assert middle_nucleus(L) == middle
        assert centrum(L) == cent
        assert nucleus(L) == left & right & middle
        assert center(L) == left & right & middle & cent


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_nuclei_match_oracle_order6(data, loops6):
    L = data.draw(st.sampled_from(loops6))
    left, right, middle, _ = oracles.nucleus_sets(L.rows())
    assert (left_nucleus(L), right_nucleus(L), middle_nucleus(L)) == (left, right, middle)


def test_nuclei_are_subloops(small_loops):
    for L in small_loops:
        for S in (left_nucleus(L), right_nucleus(L), middle_nucleus(L), nucleus(L), center(L)):
            assert L.identity in S
            assert is_subloop(L, S)


def test_group_is_its_own_nucleus(s3, z4):
    assert nucleus(s3).is_full()
    assert center(s3) == {0}
    assert center(z4).is_full()


def test_steiner10_nuclei(steiner10):
    for S in (left_nucleus(steiner10), right_nucleus(steiner10), middle_nucleus(steiner10)):
        assert S == {0}
    assert centrum(steiner10).is_full()
    assert center(steiner10) == {0}
    # x^2 = e lies in the center, so both square conditions hold
    assert is_centrum_square(steiner10)
    assert is_central_square(steiner10)


def test_square_conditions_on_z4(z4):
    assert is_central_square(z4) and is_centrum_square(z4)


@pytest.mark.parametrize("g", range(6))
def test_cosets(s3, g):
    H = ElementSet([0, s3.mul(1, 1) if s3.mul(1, 1) != 0 else 1], 6)
    assert left_coset(s3, g, H) == {s3.mul(g, h) for h in H}
    assert right_coset(s3, H, g) == {s3.mul(h, g) for h in H}


def test_nuclei_accept_bare_tables(s3):
    assert left_nucleus(s3.table) == left_nucleus(s3)
