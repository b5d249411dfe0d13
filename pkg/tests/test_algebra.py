"""Scalar arithmetic, descriptor law checks, and the text grammar."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semicat.algebra import (
    BOOL,
    FREE_WORDS,
    GAUSSIAN,
    NAT,
    RATNN,
    SEMIRINGS,
    SemiringDescriptor,
    TROPICAL,
    boolean,
    canonical_from_nat,
    check_monoid_laws,
    check_semiring_laws,
    gaussian,
    monoid_by_name,
    multiplicative_monoid,
    nat,
    parse_scalar,
    rational,
    render_scalar,
    scalar_eval,
    semiring_by_name,
    tropical,
    word,
)
from semicat.errors import (
    FormatError,
    MonoidMismatch,
    NoInvolution,
    TagMismatch,
    UnknownSemiring,
)
from semicat.sampling import monoid_pool, scalar_pool


# ---------------------------------------------------------------------------
# Arithmetic oracles


def test_nat_arithmetic():
    assert NAT.add(nat(2), nat(3)) == nat(5)
    assert NAT.mul(nat(2), nat(3)) == nat(6)
    assert NAT.star(nat(7)) == nat(7)


def test_bool_is_or_and():
    assert BOOL.add(boolean(False), boolean(True)) == boolean(True)
    assert BOOL.add(boolean(False), boolean(False)) == boolean(False)
    assert BOOL.mul(boolean(True), boolean(True)) == boolean(True)
    assert BOOL.mul(boolean(True), boolean(False)) == boolean(False)


def test_tropical_min_plus():
    assert TROPICAL.add(tropical(3), tropical(1)) == tropical(1)
    assert TROPICAL.mul(tropical(3), tropical(1)) == tropical(4)
    assert TROPICAL.zero == tropical(None)
    assert TROPICAL.one == tropical(0)


def test_tropical_infinity_absorbs_and_is_neutral():
    inf = tropical(None)
    assert TROPICAL.mul(inf, tropical(5)) == inf
    assert TROPICAL.add(inf, tropical(5)) == tropical(5)


def test_gaussian_star_is_conjugation():
    assert GAUSSIAN.star(gaussian(1, 2)) == gaussian(1, -2)
    assert GAUSSIAN.star(GAUSSIAN.star(gaussian(3, -5))) == gaussian(3, -5)


def test_gaussian_multiplication():
    # (1+2i)(3+4i) = 3+4i+6i-8 = -5+10i
    assert GAUSSIAN.mul(gaussian(1, 2), gaussian(3, 4)) == gaussian(-5, 10)


def test_rational_rejects_negative():
    with pytest.raises(ValueError):
        rational(Fraction(-1, 2))


# ---------------------------------------------------------------------------
# Law reports


@pytest.mark.parametrize("name", sorted(SEMIRINGS))
def test_builtin_semiring_laws(name):
    desc = SEMIRINGS[name]
    report = check_semiring_laws(desc, scalar_pool(desc))
    assert report.all_passed, report.render()


@pytest.mark.parametrize("name", ["nat-mul", "nat-add", "free-words"])
def test_builtin_monoid_laws(name):
    desc = monoid_by_name(name)
    report = check_monoid_laws(desc, monoid_pool(desc))
    assert report.all_passed, report.render()


def test_broken_descriptor_is_caught():
    bogus = SemiringDescriptor(
        name="nat",
        add=lambda a, b: nat(max(a.payload - b.payload, 0)),
        zero=nat(0),
        mul=NAT.mul,
        one=nat(1),
        star=None,
        tag="nat",
    )
    report = check_semiring_laws(bogus, scalar_pool(NAT))
    assert not report.all_passed
    assert "FAIL" in report.render()


def test_free_words_concatenate():
    assert FREE_WORDS.op(word("ab"), word("cd")) == word("abcd")
    assert FREE_WORDS.op(FREE_WORDS.unit, word("x")) == word("x")
    assert not FREE_WORDS.commutative


def test_monoid_member_guard():
    m = multiplicative_monoid(NAT)
    with pytest.raises(MonoidMismatch):
        m.check_member(boolean(True))


def test_scalar_eval_dispatch():
    assert scalar_eval(NAT, "add", nat(1), nat(2)) == nat(3)
    assert scalar_eval(GAUSSIAN, "star", gaussian(0, 1)) == gaussian(0, -1)
    with pytest.raises(TagMismatch):
        scalar_eval(NAT, "mul", nat(1), tropical(2))
    with pytest.raises(ValueError):
        scalar_eval(NAT, "frobnicate", nat(1))


def test_star_requires_involution():
    bare = SemiringDescriptor(
        name="nat", add=NAT.add, zero=NAT.zero, mul=NAT.mul, one=NAT.one,
        star=None, tag="nat",
    )
    with pytest.raises(NoInvolution):
        scalar_eval(bare, "star", nat(1))


# ---------------------------------------------------------------------------
# Registry lookups


def test_semiring_by_name():
    assert semiring_by_name("tropical") is TROPICAL
    with pytest.raises(UnknownSemiring):
        semiring_by_name("octonions")


def test_monoid_by_name():
    assert monoid_by_name("free-words") is FREE_WORDS
    with pytest.raises(UnknownSemiring):
        monoid_by_name("nope")


def test_canonical_from_nat():
    assert canonical_from_nat(NAT, 3) == nat(3)
    assert canonical_from_nat(BOOL, 0) == boolean(False)
    assert canonical_from_nat(BOOL, 2) == boolean(True)
    assert canonical_from_nat(TROPICAL, 0) == tropical(None)
    assert canonical_from_nat(TROPICAL, 5) == tropical(0)
    assert canonical_from_nat(GAUSSIAN, 2) == gaussian(2, 0)


# ---------------------------------------------------------------------------
# Text grammar

nonneg_fractions = st.builds(
    Fraction, st.integers(min_value=0, max_value=10**6), st.integers(1, 997)
)
signed_fractions = st.builds(
    Fraction, st.integers(min_value=-(10**6), max_value=10**6), st.integers(1, 997)
)


@given(st.integers(min_value=0, max_value=10**12))
def test_nat_text_roundtrip(n):
    s = nat(n)
    assert parse_scalar(NAT, render_scalar(s)) == s


@given(st.one_of(st.none(), st.integers(min_value=-(10**9), max_value=10**9)))
def test_tropical_text_roundtrip(v):
    s = tropical(v)
    assert parse_scalar(TROPICAL, render_scalar(s)) == s


@given(nonneg_fractions)
def test_ratnn_text_roundtrip(q):
    s = rational(q)
    assert parse_scalar(RATNN, render_scalar(s)) == s


@given(signed_fractions, signed_fractions)
def test_gaussian_text_roundtrip(re_part, im_part):
    s = gaussian(re_part, im_part)
    assert parse_scalar(GAUSSIAN, render_scalar(s)) == s


@pytest.mark.parametrize(
    "text,expected",
    [
        ("i", gaussian(0, 1)),
        ("-i", gaussian(0, -1)),
        ("2i", gaussian(0, 2)),
        ("1+2i", gaussian(1, 2)),
        ("1/2-3/4i", gaussian(Fraction(1, 2), Fraction(-3, 4))),
        ("-3", gaussian(-3, 0)),
    ],
)
def test_gaussian_literals(text, expected):
    assert parse_scalar(GAUSSIAN, text) == expected


@pytest.mark.parametrize(
    "name,text",
    [
        ("nat", "-1"),
        ("nat", "1.5"),
        ("bool", "2"),
        ("tropical", "fin"),
        ("ratnn", "-1/2"),
        ("ratnn", "1/0"),
        ("gaussian", "1+"),
        ("gaussian", "i2"),
    ],
)
def test_bad_literals_raise(name, text):
    with pytest.raises(FormatError):
        parse_scalar(name, text)


def test_unknown_grammar():
    with pytest.raises(UnknownSemiring):
        parse_scalar("octonions", "1")


def test_render_is_canonical():
    assert render_scalar(gaussian(0, 0)) == "0"
    assert render_scalar(gaussian(0, -1)) == "-i"
    assert render_scalar(tropical(None)) == "inf"
    assert render_scalar(rational(Fraction(4, 2))) == "2"
