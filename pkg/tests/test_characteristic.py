import pytest

from stringhom import parse_word, projective_word
from stringhom.characteristic import (
    approximation_bounds,
    build_characteristic_word,
    cf_report,
    extend_right,
    minimal_approximation,
    segment_coherence,
    step0,
)
from stringhom.fixtures import NAMES, fixture
from stringhom.modules import dim_vector
from stringhom.syzygy import INFINITE, pdim, simple_word
from stringhom.words import canonical

from conftest import E18


def test_step0_and_extension(e23):
    p0, q0 = step0(e23, "1")
    assert {str(p0), str(q0)} == {"e1", "b"}
    p1, q1 = extend_right(e23, e23.path("b"))
    assert (str(p1), str(q1)) == ("a", "b")


def test_one_sided_phantom(e23):
    cw = build_characteristic_word(e23, "1")
    assert cw.literal() == "* e1^ b *[a^ b]"
    assert cw.left is None and cw.right == (1, 1)
    assert not cw.finite
    rep = cf_report(e23)
    assert not rep.contravariantly_finite
    assert rep["1"].status == "phantom"


def test_projective_approximations(e17):
    rep = cf_report(e17)
    assert not rep.contravariantly_finite
    for v in ["2", "3", "6", "9", "10", "11"]:
        r = rep[v]
        assert r.approximated
        assert r.module.finite_word().key() == projective_word(e17, v).key()


def test_two_sided_phantoms(e17):
    w7 = build_characteristic_word(e17, "7").word
    w12 = build_characteristic_word(e17, "12").word
    assert w7.left and w7.right
    assert canonical(w7) == canonical(w12)
    w8 = build_characteristic_word(e17, "8").word
    assert bool(w8.left) != bool(w8.right)
    w4 = build_characteristic_word(e17, "4").word
    assert canonical(w8.segment_from(1)) == canonical(w4)


@pytest.mark.parametrize("v", sorted(E18))
def test_drawn_approximation_rows(e18, v):
    r = minimal_approximation(e18, v)
    dims, t, s = E18[v]
    assert r.approximated
    assert r.dims().as_dict() == dims
    assert r.top().as_dict() == t
    assert r.socle().as_dict() == s


def test_finite_verdict(e18):
    assert cf_report(e18).contravariantly_finite


def test_top_multiplicity_bounds(e24):
    rep = cf_report(e24)
    assert rep.contravariantly_finite
    assert rep["1"].top()["2"] == 4
    n = len(e24.vertices)
    for v, (total, mult) in approximation_bounds(e24, rep).items():
        assert total <= 4 * n and mult <= 4


@pytest.mark.parametrize("name", NAMES)
def test_trivial_word_iff_finite_pdim(name):
    alg = fixture(name)
    for v in alg.vertices:
        cw = build_characteristic_word(alg, v)
        finite = pdim(simple_word(alg, v)) is not INFINITE
        assert cw.trivial == finite
        r = minimal_approximation(alg, v)
        if finite:
            assert r.dims() == dim_vector(simple_word(alg, v))


@pytest.mark.parametrize("name", NAMES)
def test_approximation_top_is_center(name):
    alg = fixture(name)
    for r in cf_report(alg).per_simple:
        if r.approximated:
            assert r.top()[r.vertex] >= 1


@pytest.mark.parametrize("name", ["e17", "e18"])
def test_segment_coherence(name):
    alg = fixture(name)
    for v in alg.vertices:
        assert segment_coherence(alg, v) == []


def test_json(e23):
    data = cf_report(e23).to_json()
    assert data["contravariantly_finite"] is False
    assert {d["status"] for d in data["simples"]} <= {"approximated", "phantom"}
