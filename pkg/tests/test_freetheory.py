"""Coefficient-row terms, their normal forms, and agreement with the
multiset monad's unit, multiplication, and involution."""

import pytest

from semicat.algebra import GAUSSIAN, NAT, gaussian, nat
from semicat.errors import DimensionMismatch, MalformedTerm
from semicat.freetheory import (
    FreeTerm,
    law_unit_functor,
    term_normalize,
    tl_involution,
    tl_mult,
    tl_relation_check,
    tl_unit,
)
from semicat.kleisli import kl_compose, kl_coproj, kl_id
from semicat.matcat import Aleph0Map, Matrix, mat_coproj1, mat_identity, matrix
from semicat.monadcore import Atom, MultisetMonad, ms_from_pairs, ms_unit

X, Y, A = Atom("x"), Atom("y"), Atom("a")
MN = MultisetMonad(NAT)


def nat_term(coeffs, args):
    return FreeTerm(matrix(NAT, [[nat(c) for c in coeffs]]), tuple(args))


def test_normalize_merges_equal_arguments():
    t = nat_term((2, 3), (X, X))
    assert term_normalize(t) == ms_from_pairs(NAT, [(X, nat(5))])


def test_normalize_unit_and_empty():
    assert term_normalize(nat_term((1,), (X,))) == ms_from_pairs(NAT, [(X, nat(1))])
    assert term_normalize(nat_term((), ())) == ms_from_pairs(NAT, [])


def test_unit_agrees_with_ms_unit():
    assert term_normalize(tl_unit(X, NAT)) == ms_unit(X, NAT)


def test_term_shape_guards():
    with pytest.raises(MalformedTerm):
        FreeTerm(matrix(NAT, [[nat(1)], [nat(2)]]), (X, Y))
    with pytest.raises(MalformedTerm):
        FreeTerm(matrix(NAT, [[nat(1), nat(2)]]), (X,))
    with pytest.raises(MalformedTerm):
        FreeTerm(matrix(NAT, [[nat(1)]]), ("x",))


def test_mult_oracle():
    t1 = nat_term((1,), (A,))
    t2 = nat_term((2,), (A,))
    outer = nat_term((2, 1), (t1, t2))
    assert term_normalize(tl_mult(outer)) == ms_from_pairs(NAT, [(A, nat(4))])


def test_mult_of_empties():
    outer = nat_term((), ())
    assert term_normalize(tl_mult(outer)) == ms_from_pairs(NAT, [])


def test_mult_requires_term_arguments():
    with pytest.raises(MalformedTerm):
        tl_mult(nat_term((1,), (X,)))


def test_relation_check_examples():
    # send the single inner slot to position 0 of two outputs
    f = Aleph0Map(1, 2, (0,))
    g = matrix(NAT, [[nat(4)]])
    assert tl_relation_check(f, g, (X, Y))
    # collapse two inner slots onto one output
    f2 = Aleph0Map(2, 1, (0, 0))
    g2 = matrix(NAT, [[nat(2), nat(3)]])
    assert tl_relation_check(f2, g2, (X,))
    # identity reindexing is syntactically trivial
    f3 = Aleph0Map(2, 2, (0, 1))
    assert tl_relation_check(f3, g2, (X, Y))


def test_relation_check_guards():
    f = Aleph0Map(1, 2, (0,))
    g = matrix(NAT, [[nat(4)]])
    with pytest.raises(DimensionMismatch):
        tl_relation_check(f, g, (X,))
    with pytest.raises(DimensionMismatch):
        tl_relation_check(Aleph0Map(3, 2, (0, 0, 1)), g, (X, Y))


def test_involution_conjugates_coefficients():
    t = FreeTerm(
        matrix(GAUSSIAN, [[gaussian(1, 1), gaussian(2, 0)]]), (X, Y)
    )
    assert term_normalize(tl_involution(t)) == ms_from_pairs(
        GAUSSIAN, [(X, gaussian(1, -1)), (Y, gaussian(2, 0))]
    )
    twice = tl_involution(tl_involution(t))
    assert term_normalize(twice) == term_normalize(t)


def test_unit_functor_row_extraction():
    k = law_unit_functor(matrix(NAT, [[nat(2), nat(3)]]))
    assert k.dom == 1 and k.cod == 2
    assert k.components[0] == ms_from_pairs(
        NAT, [(Atom(0), nat(2)), (Atom(1), nat(3))]
    )


def test_unit_functor_preserves_identity_and_coprojections():
    assert law_unit_functor(mat_identity(NAT, 3)) == kl_id(MN, 3)
    assert law_unit_functor(mat_coproj1(NAT, 2, 1)) == kl_coproj(MN, 1, 2, 1)


def test_unit_functor_is_functorial():
    g = matrix(NAT, [[nat(1), nat(2)], [nat(0), nat(1)]])
    h = matrix(NAT, [[nat(3)], [nat(4)]])
    lhs = law_unit_functor(Matrix(NAT, 2, 1, (nat(11), nat(4))))
    assert lhs == kl_compose(law_unit_functor(g), law_unit_functor(h))


def test_term_debug_rendering():
    t = nat_term((2, 3), (X, Y))
    assert str(t) == "k_2([2,3]; (x, y))"
