import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsmith import NotLatinRow, ParseError, load_loop, make_loop, save_loop
from loopsmith.io import format_loop, parse_loop


def test_load_fixture(fixtures_dir, z4):
    assert load_loop(fixtures_dir / "z4.loop") == z4


def test_notlatin_fixture(fixtures_dir):
    with pytest.raises(NotLatinRow):
        load_loop(fixtures_dir / "notlatin.loop")


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("# only a comment\n", 1),
    ("x\n", 1),
    ("0\n", 1),
    ("2\n0 1\n1 a\n", 3),
    ("3\n0 1 2\n1 2\n2 0 1\n", 3),
    ("2\n0 1\n", 2),
    ("2\n0 1\n1 0\n0 1\n", 4),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_loop(text)
    assert info.value.line == line


def test_comments_and_blank_lines():
    L = parse_loop("# header\n\n2  # order\n0 1\n\n1 0   # last row\n")
    assert L.rows() == [[0, 1], [1, 0]]


def test_format_pads_columns(steiner10):
    text = format_loop(steiner10, "two\nlines")
    assert text.startswith("# two\n# lines\n10\n")
    assert " 0  1  2" not in text and "0 1 2 3 4 5 6 7 8 9" in text


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip(data, loops_le6, tmp_path_factory):
    L = data.draw(st.sampled_from(loops_le6))
    path = tmp_path_factory.mktemp("io") / "x.loop"
    save_loop(L, path, "round trip")
    assert load_loop(path) == L
    assert parse_loop(format_loop(L)) == L


def test_round_trip_keeps_identity():
    L = make_loop([[1, 2, 0], [2, 0, 1], [0, 1, 2]])
    assert parse_loop(format_loop(L)).identity == 2
