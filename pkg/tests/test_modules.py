import pytest

from stringhom import parse_word, projective_word
from stringhom.characteristic import minimal_approximation
from stringhom.errors import InfiniteModule, MalformedBandWord
from stringhom.modules import (
    PseudoBandDescr,
    StringModuleDescr,
    dim_vector,
    is_projective,
    render_dot,
    socle,
    top,
)
from stringhom.syzygy import simple_word


def test_dim_vectors(e23):
    assert dim_vector(parse_word(e23, "a^ b")).as_dict() == {"1": 1, "2": 2}
    assert dim_vector(simple_word(e23, "1")).as_dict() == {"1": 1}
    assert dim_vector(projective_word(e23, "1")).as_dict() == {"1": 2, "2": 2}


def test_top_and_socle(e23):
    w = parse_word(e23, "b a^ b")
    assert top(w).as_dict() == {"1": 2}
    assert socle(w).as_dict() == {"2": 2}
    s = simple_word(e23, "2")
    assert top(s) == socle(s) == dim_vector(s)


def test_top_multiplicity_four(e24):
    r = minimal_approximation(e24, "1")
    assert r.top()["2"] == 4


def test_is_projective(e23, field_k):
    assert is_projective(StringModuleDescr(e23, parse_word(e23, "g")))
    assert not is_projective(StringModuleDescr(e23, parse_word(e23, "a^ b")))
    assert is_projective(simple_word(field_k, "1"))


def test_infinite_module_has_no_graph(e23):
    w = parse_word(e23, "* e1^ b *[a^ b]")
    with pytest.raises(InfiniteModule):
        StringModuleDescr(e23, w).graph()


def test_band_descriptor_checks(e23):
    v = parse_word(e23, "a^ b")
    PseudoBandDescr(e23, v, 2, (1, 0))
    with pytest.raises(MalformedBandWord):
        PseudoBandDescr(e23, v, 2, (1,))
    with pytest.raises(MalformedBandWord):
        PseudoBandDescr(e23, v, 1, (0,))
    with pytest.raises(MalformedBandWord):
        PseudoBandDescr(e23, parse_word(e23, "a^ b a^ b"), 1, (1,))


def test_band_dims(e23):
    v = parse_word(e23, "a^ b")
    one = dim_vector(PseudoBandDescr(e23, v, 1, (1,)))
    two = dim_vector(PseudoBandDescr(e23, v, 2, (1, 1)))
    assert one.as_dict() == {"1": 1, "2": 1}
    assert two == one.scale(2)


def test_render_trivial(e23):
    dot = render_dot(simple_word(e23, "1"))
    assert dot.count("[label=") == 1


def test_render_periodic(e23):
    w = parse_word(e23, "* e1^ b *[a^ b]")
    dot = render_dot(StringModuleDescr(e23, w), window=2)
    nodes = [l for l in dot.splitlines() if l.strip().startswith("n") and "label=" in l and "->" not in l]
    assert [l.split('label="')[1][0] for l in nodes] == ["1", "2", "1", "2", "1", "2"]
    edges = [l.split('label="')[1][0] for l in dot.splitlines() if "->" in l and "label=" in l]
    assert edges == ["b", "a", "b", "a", "b"]
    assert '"..."' in dot
    assert render_dot(StringModuleDescr(e23, w), window=2) == dot


def test_render_band(e23):
    dot = render_dot(PseudoBandDescr(e23, parse_word(e23, "a^ b"), 2, (1, 1)))
    assert "dashed" in dot
