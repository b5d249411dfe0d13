"""Multiset and action monads: units, multiplication, strength, and the
generically derived additive and module structure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semicat.algebra import (
    BOOL,
    FREE_WORDS,
    GAUSSIAN,
    MONOIDS,
    NAT,
    TROPICAL,
    boolean,
    gaussian,
    nat,
    tropical,
    word,
)
from semicat.errors import (
    CarrierMismatch,
    ElementOutsideCarrier,
    KeyNotMultiset,
    MonoidMismatch,
    NoInvolution,
    NotAdditive,
    NotCommutative,
    TagMismatch,
)
from semicat.monadcore import (
    ActVal,
    ActionMonad,
    Atom,
    Inl,
    Inr,
    Multiset,
    MultisetMonad,
    Pair,
    STAR,
    action_unit_mult,
    bicartesian,
    carrier,
    carrier_map,
    commutativity_witness,
    eval_at_one,
    generic_strength,
    ms_from_pairs,
    ms_involution,
    ms_map_scalars,
    multiplicity,
    render_elem,
    render_multiset,
    scalar_action,
    tx_add,
    tx_zero,
)

A, B, C = Atom("a"), Atom("b"), Atom("c")
U, V, X, Y = Atom("u"), Atom("v"), Atom("x"), Atom("y")

MN = MultisetMonad(NAT)
MT = MultisetMonad(TROPICAL)
MG = MultisetMonad(GAUSSIAN)
AW = ActionMonad(FREE_WORDS)


def ms(S, *pairs):
    return ms_from_pairs(S, pairs)


# ---------------------------------------------------------------------------
# fmap / unit / mult oracles


def test_fmap_merges_preimages():
    phi = ms(NAT, (A, nat(2)), (B, nat(3)), (C, nat(1)))
    xs = carrier([A, B, C])
    ys = carrier([U, V])
    f = carrier_map(xs, ys, {A: U, B: U, C: V})
    assert MN.fmap(f, phi) == ms(NAT, (U, nat(5)), (V, nat(1)))


def test_fmap_identity_and_empty():
    phi = ms(NAT, (A, nat(2)))
    assert MN.fmap(lambda e: e, phi) == phi
    assert MN.fmap(lambda e: e, ms(NAT)) == ms(NAT)


def test_unit_is_singleton_one():
    assert MN.unit(X) == ms(NAT, (X, nat(1)))
    assert MultisetMonad(BOOL).unit(X) == ms(BOOL, (X, boolean(True)))
    assert MT.unit(X) == ms(TROPICAL, (X, tropical(0)))


def test_mult_oracle():
    phi1 = ms(NAT, (A, nat(1)), (B, nat(3)))
    phi2 = ms(NAT, (B, nat(2)))
    outer = ms(NAT, (MN.embed(phi1), nat(2)), (MN.embed(phi2), nat(1)))
    assert MN.mult(outer) == ms(NAT, (A, nat(2)), (B, nat(8)))


def test_mult_of_unit_layers():
    phi = ms(NAT, (A, nat(4)), (B, nat(1)))
    assert MN.mult(MN.unit(MN.embed(phi))) == phi
    assert MN.mult(ms(NAT)) == ms(NAT)


def test_mult_rejects_plain_keys():
    with pytest.raises(KeyNotMultiset):
        MN.mult(ms(NAT, (A, nat(1))))


# ---------------------------------------------------------------------------
# Strength and double strength


def test_strength_pairs_on_the_right():
    assert generic_strength(MN, ms(NAT, (A, nat(2))), Y) == ms(
        NAT, (Pair(A, Y), nat(2))
    )
    assert generic_strength(MN, ms(NAT), Y) == ms(NAT)


def test_strength_on_action_values():
    got = generic_strength(AW, ActVal(word("m"), X), Y)
    assert got == ActVal(word("m"), Pair(X, Y))


def test_dst_oracle():
    phi = ms(NAT, (A, nat(2)), (B, nat(1)))
    psi = ms(NAT, (X, nat(3)))
    expected = ms(NAT, (Pair(A, X), nat(6)), (Pair(B, X), nat(3)))
    assert MN.dst(phi, psi) == expected
    assert MN.dst(ms(NAT), psi) == ms(NAT)


def test_dst_tag_mismatch():
    with pytest.raises(TagMismatch):
        MN.dst(ms(NAT, (A, nat(1))), ms(TROPICAL, (X, tropical(0))))


def test_commutativity_witness_agrees_for_multisets():
    report = commutativity_witness(MN, ms(NAT, (A, nat(2))), ms(NAT, (X, nat(3))))
    assert report.equal
    assert report.left == ms(NAT, (Pair(A, X), nat(6)))


def test_commutativity_witness_splits_free_words():
    report = commutativity_witness(
        AW, ActVal(word("ab"), X), ActVal(word("cd"), Y)
    )
    assert not report.equal
    assert report.left == ActVal(word("abcd"), Pair(X, Y))
    assert report.right == ActVal(word("cdab"), Pair(X, Y))


def test_action_dst_requires_commutativity():
    with pytest.raises(NotCommutative):
        AW.dst(ActVal(word("a"), X), ActVal(word("b"), Y))


# ---------------------------------------------------------------------------
# Additive structure


def test_bicartesian_roundtrip_oracle():
    w = ms(NAT, (Inl(A), nat(2)), (Inr(B), nat(3)))
    u, v = bicartesian(MN, "fwd", w)
    assert u == ms(NAT, (A, nat(2)))
    assert v == ms(NAT, (B, nat(3)))
    assert bicartesian(MN, "inv", (u, v)) == w


def test_bicartesian_fwd_empty():
    assert bicartesian(MN, "fwd", ms(NAT)) == (ms(NAT), ms(NAT))


def test_bicartesian_rejects_untagged_keys():
    with pytest.raises(ElementOutsideCarrier):
        MN.bc(ms(NAT, (A, nat(1))))


def test_bicartesian_needs_additivity():
    with pytest.raises(NotAdditive):
        bicartesian(AW, "fwd", ActVal(word("a"), Inl(X)))


def test_tx_add_is_pointwise():
    u = ms(NAT, (A, nat(2)))
    v = ms(NAT, (A, nat(3)), (B, nat(1)))
    assert tx_add(MN, u, v) == ms(NAT, (A, nat(5)), (B, nat(1)))


def test_tx_add_tropical_is_min():
    u = ms(TROPICAL, (A, tropical(2)))
    v = ms(TROPICAL, (A, tropical(5)))
    assert tx_add(MT, u, v) == ms(TROPICAL, (A, tropical(2)))


def test_tx_add_unit_and_mismatch():
    u = ms(NAT, (A, nat(2)))
    assert tx_add(MN, u, tx_zero(MN)) == u
    with pytest.raises(CarrierMismatch):
        tx_add(MN, u, ms(TROPICAL, (A, tropical(1))))


def test_scalar_action_scales_multiplicities():
    u = ms(NAT, (A, nat(2)), (B, nat(1)))
    three = ms(NAT, (STAR, nat(3)))
    assert scalar_action(MN, three, u) == ms(NAT, (A, nat(6)), (B, nat(3)))
    assert scalar_action(MN, MN.unit(STAR), u) == u
    assert scalar_action(MN, tx_zero(MN), u) == tx_zero(MN)


def test_scalar_action_needs_point_scalar():
    u = ms(NAT, (A, nat(2)))
    with pytest.raises(ElementOutsideCarrier):
        scalar_action(MN, ms(NAT, (A, nat(3))), u)


# ---------------------------------------------------------------------------
# Evaluation at the singleton carrier


def test_eval_at_one_multiset_ops():
    E = eval_at_one(MN)
    two = ms(NAT, (STAR, nat(2)))
    three = ms(NAT, (STAR, nat(3)))
    assert E.mul(two, three) == ms(NAT, (STAR, nat(6)))
    assert E.add(two, three) == ms(NAT, (STAR, nat(5)))
    assert E.zero == ms(NAT)
    assert E.one == ms(NAT, (STAR, nat(1)))


def test_eval_at_one_action_monad_is_monoid():
    E = eval_at_one(AW)
    w1 = ActVal(word("ab"), STAR)
    w2 = ActVal(word("c"), STAR)
    assert E.op(w1, w2) == ActVal(word("abc"), STAR)
    assert E.unit == ActVal(word(""), STAR)
    assert not hasattr(E, "zero")


def test_eval_at_one_star():
    E = eval_at_one(MG)
    v = ms(GAUSSIAN, (STAR, gaussian(1, 2)))
    assert E.star(v) == ms(GAUSSIAN, (STAR, gaussian(1, -2)))


# ---------------------------------------------------------------------------
# Action monad plumbing


def test_action_unit_mult_oracles():
    assert action_unit_mult(FREE_WORDS, "unit", X) == ActVal(word(""), X)
    got = action_unit_mult(FREE_WORDS, "mult", word("a"), ActVal(word("b"), X))
    assert got == ActVal(word("ab"), X)
    neutral = action_unit_mult(FREE_WORDS, "mult", word(""), ActVal(word("w"), X))
    assert neutral == ActVal(word("w"), X)


def test_action_monad_member_guard():
    with pytest.raises(MonoidMismatch):
        AW.check_value(ActVal(nat(1), X))


# ---------------------------------------------------------------------------
# Involution


def test_involution_conjugates():
    phi = ms(GAUSSIAN, (A, gaussian(1, 2)))
    assert ms_involution(phi) == ms(GAUSSIAN, (A, gaussian(1, -2)))
    assert ms_involution(ms_involution(phi)) == phi


def test_involution_identity_on_nat():
    phi = ms(NAT, (A, nat(2)))
    assert ms_involution(phi) == phi


def test_involution_requires_star():
    assert not AW.involutive
    with pytest.raises(NoInvolution):
        AW.involution(ActVal(word("a"), X))


# ---------------------------------------------------------------------------
# Scalar reindexing and rendering


def test_ms_map_scalars():
    phi = ms(NAT, (A, nat(2)), (B, nat(0)))
    out = ms_map_scalars(lambda s: tropical(s.payload), phi, TROPICAL)
    assert out == ms(TROPICAL, (A, tropical(2)))


def test_rendering():
    phi = ms(NAT, (B, nat(1)), (A, nat(2)))
    assert render_multiset(phi) == "{a: 2, b: 1}"
    assert render_multiset(ms(NAT)) == "{}"
    assert render_elem(Pair(Inl(A), Inr(STAR))) == "(inl a,inr star)"


# ---------------------------------------------------------------------------
# Property tests over random ingredients

scalars_nat = st.integers(min_value=0, max_value=9).map(nat)
atoms = st.sampled_from([A, B, C])


@st.composite
def nat_multisets(draw):
    pairs = draw(st.lists(st.tuples(atoms, scalars_nat), max_size=4))
    return ms_from_pairs(NAT, pairs)


@given(nat_multisets(), nat_multisets())
def test_tx_add_commutes(u, v):
    assert tx_add(MN, u, v) == tx_add(MN, v, u)


@given(nat_multisets(), nat_multisets(), nat_multisets())
@settings(max_examples=60)
def test_tx_add_associates(u, v, w):
    assert tx_add(MN, tx_add(MN, u, v), w) == tx_add(MN, u, tx_add(MN, v, w))


@given(nat_multisets(), nat_multisets())
def test_dst_matches_generic_composites(u, v):
    report = commutativity_witness(MN, u, v)
    assert report.equal
    assert MN.dst(u, v) == report.left


@given(nat_multisets())
def test_strength_then_drop_is_identity(u):
    dropped = MN.fmap(lambda p: p.left, generic_strength(MN, u, Y))
    assert dropped == u


@given(nat_multisets(), nat_multisets())
def test_bc_inv_then_bc(u, v):
    assert MN.bc(MN.bc_inv(u, v)) == (u, v)
