"""Matrices over a semiring: composition, biproduct structure, tensor,
dagger, and the text format."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semicat.algebra import GAUSSIAN, NAT, RATNN, TROPICAL, gaussian, nat, tropical
from semicat.errors import (
    DimensionMismatch,
    FormatError,
    IndexOutOfRange,
    TagMismatch,
)
from semicat.matcat import (
    Aleph0Map,
    Matrix,
    aleph0_compose,
    aleph0_embed,
    coord,
    homset_semiring,
    mat_add,
    mat_compose,
    mat_cotuple,
    mat_dagger,
    mat_identity,
    mat_structural,
    mat_tensor,
    mat_tuple,
    matrix,
    parse_mat_text,
    render_mat_text,
)


def nats(*values):
    return [[nat(v) for v in row] for row in values]


def test_identity_matrices():
    assert mat_identity(NAT, 2) == matrix(NAT, nats((1, 0), (0, 1)))
    assert mat_identity(TROPICAL, 2) == matrix(
        TROPICAL, [[tropical(0), tropical(None)], [tropical(None), tropical(0)]]
    )
    empty = mat_identity(NAT, 0)
    assert empty.rows == 0 and empty.cols == 0


def test_compose_oracle():
    g = matrix(NAT, nats((1, 2), (0, 1)))
    h = matrix(NAT, nats((3,), (4,)))
    assert mat_compose(g, h) == matrix(NAT, nats((11,), (4,)))


def test_compose_tropical_oracle():
    g = matrix(TROPICAL, [[tropical(1), tropical(3)]])
    h = matrix(TROPICAL, [[tropical(2)], [tropical(0)]])
    assert mat_compose(g, h) == matrix(TROPICAL, [[tropical(3)]])


def test_compose_identity_neutral():
    g = matrix(NAT, nats((1, 2, 3), (4, 5, 6)))
    assert mat_compose(mat_identity(NAT, 2), g) == g
    assert mat_compose(g, mat_identity(NAT, 3)) == g


def test_compose_guards():
    g = matrix(NAT, nats((1, 2),))
    with pytest.raises(DimensionMismatch):
        mat_compose(g, g)
    with pytest.raises(TagMismatch):
        mat_compose(g, matrix(TROPICAL, [[tropical(0)], [tropical(1)]]))


def test_structural_oracles():
    assert mat_structural("coproj1", NAT, 2, 1) == matrix(
        NAT, nats((1, 0, 0), (0, 1, 0))
    )
    two = matrix(NAT, nats((2,)))
    three = matrix(NAT, nats((3,)))
    assert mat_structural("cotuple", two, three) == matrix(NAT, nats((2,), (3,)))
    assert mat_structural("tuple", two, three) == matrix(NAT, nats((2, 3)))
    with pytest.raises(ValueError):
        mat_structural("left-unitor", NAT, 1, 1)


def test_cotuple_needs_matching_cols():
    with pytest.raises(DimensionMismatch):
        mat_cotuple(matrix(NAT, nats((1, 2))), matrix(NAT, nats((1,))))
    with pytest.raises(DimensionMismatch):
        mat_tuple(matrix(NAT, nats((1,), (2,))), matrix(NAT, nats((1,))))


def test_add_is_entrywise_via_structure():
    f = matrix(NAT, nats((1, 2), (3, 4)))
    g = matrix(NAT, nats((10, 20), (30, 40)))
    assert mat_add(f, g) == matrix(NAT, nats((11, 22), (33, 44)))


def test_zero_through_the_empty_object():
    z = mat_compose(Matrix(NAT, 1, 0, ()), Matrix(NAT, 0, 1, ()))
    assert z == matrix(NAT, nats((0,)))


def test_coord_roundtrip():
    assert coord(3, 4, "split", 7) == (1, 3)
    assert coord(3, 4, "join", (1, 3)) == 7
    for c in range(12):
        assert coord(3, 4, "join", coord(3, 4, "split", c)) == c
    with pytest.raises(IndexOutOfRange):
        coord(3, 4, "split", 12)
    with pytest.raises(IndexOutOfRange):
        coord(3, 4, "join", (3, 0))


def test_tensor_oracle():
    g = matrix(NAT, nats((1, 2), (3, 4)))
    h = matrix(NAT, nats((0, 1)))
    expected = matrix(NAT, nats((0, 1, 0, 2), (0, 3, 0, 4)))
    assert mat_tensor(g, h) == expected


def test_tensor_with_empty_factor():
    g = matrix(NAT, nats((1, 2)))
    z = Matrix(NAT, 0, 2, ())
    t = mat_tensor(g, z)
    assert t.rows == 0 and t.cols == 4


def test_dagger_oracle():
    f = matrix(
        GAUSSIAN,
        [[gaussian(0, 1), gaussian(0, 0)], [gaussian(1, 0), gaussian(0, 2)]],
    )
    expected = matrix(
        GAUSSIAN,
        [[gaussian(0, -1), gaussian(1, 0)], [gaussian(0, 0), gaussian(0, -2)]],
    )
    assert mat_dagger(f) == expected
    assert mat_dagger(mat_dagger(f)) == f


def test_aleph0_embed_one_hot():
    f = Aleph0Map(2, 3, (2, 0))
    assert aleph0_embed(f, NAT) == matrix(NAT, nats((0, 0, 1), (1, 0, 0)))


def test_aleph0_functorial():
    f = Aleph0Map(2, 3, (2, 0))
    g = Aleph0Map(3, 2, (1, 1, 0))
    assert aleph0_compose(f, g) == Aleph0Map(2, 2, (0, 1))
    assert aleph0_embed(aleph0_compose(f, g), NAT) == mat_compose(
        aleph0_embed(f, NAT), aleph0_embed(g, NAT)
    )


def test_aleph0_table_validation():
    with pytest.raises(IndexOutOfRange):
        Aleph0Map(2, 2, (0, 5))
    with pytest.raises(DimensionMismatch):
        Aleph0Map(2, 2, (0,))


def test_homset_semiring_is_the_scalar_semiring_in_a_box():
    H = homset_semiring(NAT)
    box = lambda v: matrix(NAT, nats((v,)))
    assert H.add(box(2), box(3)) == box(5)
    assert H.mul(box(2), box(3)) == box(6)
    assert H.zero == box(0)
    assert H.one == box(1)


def test_matrix_factory_guards():
    with pytest.raises(DimensionMismatch):
        matrix(NAT, nats((1, 2), (3,)))
    with pytest.raises(TagMismatch):
        matrix(NAT, [[tropical(1)]])


def test_entry_bounds():
    g = matrix(NAT, nats((1, 2)))
    assert g.entry(0, 1) == nat(2)
    with pytest.raises(IndexOutOfRange):
        g.entry(1, 0)


# ---------------------------------------------------------------------------
# Text format


def test_parse_render_roundtrip_fixture():
    text = "semiring tropical 2 2\n1 inf\n-2 0\n"
    m = parse_mat_text(text)
    assert m.entry(0, 1) == tropical(None)
    assert render_mat_text(m) == text


def test_parse_errors_carry_positions():
    with pytest.raises(FormatError, match="line 1"):
        parse_mat_text("semiring nat 2\n")
    with pytest.raises(FormatError, match="unknown semiring"):
        parse_mat_text("semiring octonions 1 1\n1\n")
    with pytest.raises(FormatError, match="line 2, column 3"):
        parse_mat_text("semiring nat 1 2\n1 x\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_mat_text("semiring nat 2 1\n1\n")
    with pytest.raises(FormatError, match="expected 2 entries"):
        parse_mat_text("semiring nat 1 2\n1\n")
    with pytest.raises(FormatError, match="trailing"):
        parse_mat_text("semiring nat 1 1\n1\nextra\n")


scalar_strategies = {
    "nat": st.integers(0, 99).map(nat),
    "tropical": st.one_of(st.none(), st.integers(-99, 99)).map(tropical),
}


@st.composite
def small_matrices(draw):
    name = draw(st.sampled_from(sorted(scalar_strategies)))
    S = {"nat": NAT, "tropical": TROPICAL}[name]
    rows = draw(st.integers(0, 3))
    cols = draw(st.integers(0, 3))
    entries = draw(
        st.lists(
            scalar_strategies[name],
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    return Matrix(S, rows, cols, tuple(entries))


@given(small_matrices())
def test_text_roundtrip_property(m):
    assert parse_mat_text(render_mat_text(m)) == m


@given(small_matrices())
def test_add_commutes_with_itself(m):
    doubled = mat_add(m, m)
    S = m.semiring
    assert doubled == Matrix(
        S, m.rows, m.cols, tuple(S.add(e, e) for e in m.entries)
    )
