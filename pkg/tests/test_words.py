import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringhom import (
    EventuallyPeriodicWord,
    FiniteWord,
    canonical,
    expand,
    invert,
    is_primitive,
    parse_word,
    validate_word,
)
from stringhom.errors import MalformedBandWord, NotAWord
from stringhom.fixtures import NAMES, fixture
from stringhom.generate import random_word
from stringhom.words import power


def test_validate_tokens(e23):
    w = validate_word(e23, ["b", "a^", "b"])
    assert [(str(p), str(q)) for p, q in w.pairs] == [("e1", "b"), ("a", "b")]


def test_same_arrow_back_and_forth(e23):
    with pytest.raises(NotAWord):
        validate_word(e23, ["a", "a^"])
    with pytest.raises(NotAWord):
        validate_word(e23, ["a^", "a"])


def test_zero_syllable(e23):
    with pytest.raises(NotAWord):
        validate_word(e23, ["a", "g", "a"])


def test_empty_word(e23):
    w = validate_word(e23, [], vertex="1")
    assert w.trivial and str(w) == "e1"


def test_invert_two_vertex(e23):
    w = validate_word(e23, "b a^ b")
    assert str(invert(w)) == "b^ a b^"
    assert invert(validate_word(e23, [], vertex="1")) == validate_word(e23, [], vertex="1")


def test_canonical_trivial(e23):
    e = validate_word(e23, [], vertex="2")
    assert canonical(e) == e


def test_primitive(e23, e4):
    v = parse_word(e23, "a^ b")
    assert is_primitive(v)
    assert not is_primitive(power(v, 2))
    assert is_primitive(parse_word(e4, "g^ d"))


def test_band_word_with_trivial_flank(e23):
    with pytest.raises(MalformedBandWord):
        is_primitive(parse_word(e23, "e1^ b"))


def test_expand(e23):
    w = parse_word(e23, "* e1^ b *[a^ b]")
    assert isinstance(w, EventuallyPeriodicWord)
    assert str(expand(w, 2)) == "b a^ b a^ b"
    assert str(expand(w, 0)) == "b"
    f = parse_word(e23, "b a^ b")
    assert expand(f, 10**6) == f


def test_periodic_literal_roundtrip(e17):
    lit = "[a4_6^ a4_2 a1_2^ a8_1^ a8_6]* a4_6^ a4_2 a1_2^ a1_3 a5_3^ a12_5^ a12_11 *[a7_11^ a7_5 a12_5^ a12_11]"
    w = parse_word(e17, lit)
    assert w.literal() == lit
    assert parse_word(e17, w.literal()) == w


def test_periodic_canonical_absorbs_shift(e23):
    a = parse_word(e23, "* e1^ b *[a^ b]")
    b = parse_word(e23, "* e1^ b a^ b *[a^ b]")
    assert a.canonical() == b.canonical()


def test_segment_from(e17):
    w8 = parse_word(e17, "* e8^ a8_1 a1_2 *[a4_2^ a4_6 a8_6^ a8_1 a1_2]")
    w4 = parse_word(e17, "* e4^ a4_6 *[a8_6^ a8_1 a1_2 a4_2^ a4_6]")
    assert w8.segment_from(1).canonical() == w4.canonical()


# -- properties over random words --------------------------------------------

def _words(name, n, seed):
    alg = fixture(name)
    rng = random.Random(seed)
    return [random_word(alg, rng) for _ in range(n)]


@pytest.mark.parametrize("name", NAMES)
def test_involution_laws(name):
    for w in _words(name, 200, 7):
        assert invert(invert(w)) == w
        assert canonical(w) == canonical(invert(w))
        assert canonical(canonical(w)) == canonical(w)


def test_canonical_idempotent_large():
    for w in _words("e17", 1000, 11):
        assert canonical(canonical(w)) == canonical(w)


@pytest.mark.parametrize("name", NAMES)
def test_literal_roundtrip(name):
    alg = fixture(name)
    for w in _words(name, 200, 3):
        assert parse_word(alg, str(w)) == w


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 10**9), name=st.sampled_from(NAMES))
def test_prefixes_are_words(seed, name):
    alg = fixture(name)
    w = random_word(alg, random.Random(seed))
    letters = w.letters()
    for k in range(1, len(letters) + 1):
        validate_word(alg, letters[:k])


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_periodic_inverse_involution(seed):
    alg = fixture("e17")
    from stringhom.characteristic import build_characteristic_word

    v = alg.vertices[seed % alg.n]
    w = build_characteristic_word(alg, v).word
    assert w.inverse().inverse() == w
    assert w.canonical() == w.inverse().canonical()
    assert w.canonical().canonical() == w.canonical()
