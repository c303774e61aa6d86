import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopsmith import IdentityId as I
from loopsmith import satisfies
from loopsmith.filters import parse_filter

TAGS = ["c", "lc", "rc", "moufang", "comm", "assoc", "flexible"]


def test_precedence(small_loops):
    f = parse_filter("comm | c & !assoc")
    g = parse_filter("comm | (c & !assoc)")
    for L in small_loops:
        assert f(L) == g(L)


def test_required_tags():
    assert parse_filter("c & !moufang").required_tags() == {I.C}
    assert parse_filter("c | comm").required_tags() == set()
    assert parse_filter("(comm & lc) & !(rc | c)").required_tags() == {I.COMMUTATIVE, I.LC_A}
    assert parse_filter("!(c | comm)").tags() == {I.C, I.COMMUTATIVE}


@pytest.mark.parametrize("bad", ["", "c &", "(c", "c)", "c comm", "!", "nonsense", "c & & rc"])
def test_rejects_bad_expressions(bad):
    with pytest.raises(ValueError):
        parse_filter(bad)


def exprs():
    leaf = st.sampled_from(TAGS)
    return st.recursive(leaf, lambda inner: st.one_of(
        inner.map(lambda e: f"!{e}"),
        st.tuples(inner, inner).map(lambda p: f"({p[0]} & {p[1]})"),
        st.tuples(inner, inner).map(lambda p: f"({p[0]} | {p[1]})"),
    ), max_leaves=6)


def evaluate(expr, L):
    # python's own boolean operators as the reference evaluator
    src = expr.replace("!", " not ").replace("&", " and ").replace("|", " or ")
    env = {t: satisfies(L, t) for t in TAGS}
    return eval(src, {}, env)


@given(expr=exprs(), k=st.integers(0, 62))
def test_filter_matches_python_boolean_semantics(expr, k, small_loops):
    L = small_loops[k]
    assert parse_filter(expr)(L) == evaluate(expr, L)
