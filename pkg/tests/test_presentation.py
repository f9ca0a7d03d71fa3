import pytest

from stringhom import format_presentation, load_algebra, parse_presentation, projective_word
from stringhom.errors import (
    DegreeViolation,
    NotAdmissible,
    ParseError,
    StringConditionViolation,
    UnknownArrow,
    UnknownVertex,
)
from stringhom.fixtures import NAMES, fixture, fixture_text
from stringhom.presentation import Path


def test_parse_two_vertex_counts():
    p = parse_presentation(fixture_text("e23"))
    assert (len(p.vertices), len(p.arrows), len(p.forbidden)) == (2, 3, 3)


def test_single_vertex_no_arrows(field_k):
    assert field_k.dimension == 1
    assert field_k.arrows == []


def test_unknown_arrow_in_relation():
    with pytest.raises(UnknownArrow) as exc:
        parse_presentation("vertices: 1 2\narrow a: 1 -> 2\nzero: a.z\n")
    assert exc.value.name == "z"


def test_unknown_vertex():
    with pytest.raises(UnknownVertex):
        parse_presentation("vertices: 1\narrow a: 1 -> 3\n")


def test_malformed_line_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_presentation("vertices: 1 2\n\narrow a 1 -> 2\n")
    assert exc.value.line == 3


def test_arrow_name_clashing_with_trivial_path():
    with pytest.raises(ParseError):
        parse_presentation("vertices: 1 2\narrow e1: 1 -> 2\n")


def test_dimensions(all_fixtures):
    dims = {n: a.dimension for n, a in all_fixtures.items()}
    assert dims == {"e4": 8, "e23": 6, "e17": 49, "e18": 45, "e24": 29}


def test_small_algebra_paths(e4):
    names = sorted(str(p) for p in e4.nonzero_paths)
    assert names == sorted(["e1", "e2", "a", "b", "g", "d", "a.g", "b.d"])


def test_three_out_arrows():
    with pytest.raises(DegreeViolation) as exc:
        load_algebra("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 1 -> 2\n")
    assert exc.value.vertex == "1"


def test_string_condition():
    text = "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 3\n"
    with pytest.raises(StringConditionViolation):
        load_algebra(text)
    load_algebra(text + "zero: a.c\n")


def test_not_admissible():
    with pytest.raises(NotAdmissible):
        load_algebra("vertices: 1\narrow x: 1 -> 1\n")
    assert load_algebra("vertices: 1\narrow x: 1 -> 1\nzero: x.x.x\n").dimension == 3


def test_longer_relation_respected(e17):
    # a5_8.a8_6.a6_9 is nonzero but cannot be continued by a9_10
    assert e17.is_nonzero(e17.path("a5_8.a8_6.a6_9"))
    assert e17.compose(e17.path("a9_10"), e17.path("a5_8.a8_6.a6_9")) is None


def test_compose(e23):
    g, a = e23.path("g"), e23.path("a")
    assert e23.compose(g, a) == e23.path("a.g")
    assert e23.compose(a, g) is None
    assert e23.compose(a, e23.trivial("1")) == a


def test_max_extension(e23):
    assert e23.max_extension(e23.path("a")) == e23.path("g")
    assert e23.max_extension(e23.path("b")) == e23.trivial("2")
    assert e23.max_extension(e23.trivial("1"), avoid="a") == e23.path("b")


def test_chop_first(e23):
    assert e23.chop_first(e23.path("a.g")) == e23.path("g")
    assert e23.chop_first(e23.path("g")) == e23.trivial("1")
    assert e23.chop_first(e23.trivial("1")) is None


def test_projective_words(e23, field_k):
    assert str(projective_word(e23, "1")) == "g^ a^ b"
    assert str(projective_word(e23, "2")) == "g"
    assert projective_word(field_k, "1").trivial


def test_zero_path_literal_rejected(e23):
    with pytest.raises(ValueError):
        e23.path("a.g.a")


@pytest.mark.parametrize("name", NAMES)
def test_format_roundtrip(name):
    p = parse_presentation(fixture_text(name))
    q = parse_presentation(format_presentation(p))
    assert q == p


@pytest.mark.parametrize("name", NAMES)
def test_factor_closed(name):
    alg = fixture(name)
    nz = set(alg.nonzero_paths)
    for p in nz:
        for i in range(len(p.arrows)):
            for j in range(i + 1, len(p.arrows) + 1):
                sub = alg.presentation.make_path(p.arrows[i:j])
                assert sub in nz


def test_branches_twelve_vertex(e17):
    assert [str(b) for b in e17.branches("7")] == ["a7_11.a11_7", "a7_5.a5_8.a8_6.a6_9"]
    assert [str(b) for b in e17.branches("12")] == ["a12_11.a11_12", "a12_5.a5_3.a3_9"]


def test_corrected_fixture_shape(e24):
    assert [str(b) for b in e24.branches("2")] == ["a2_3.a3_2", "a2_4.a4_4.a4_8"]
    assert [str(b) for b in e24.branches("6")] == ["a6_1.a1_3.a3_7", "a6_5.a5_2"]
