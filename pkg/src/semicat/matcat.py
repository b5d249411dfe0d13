"""Matrices over a semiring as a category with biproducts, tensor, dagger.

A morphism from n to m is an n by m grid, stored row major. Composition
follows the source-to-target reading: ``mat_compose(g, h)`` is "g then h",
with entries sum_j g(i,j) * h(j,k). Coprojections and projections are the
0/1 block matrices; the tensor flattens index pairs through the fixed
coordinatisation c = a*m + b, and :func:`mat_dagger` is the starred
transpose.

The hom-set of endomaps of 1 forms a semiring
(:func:`homset_semiring`), with addition computed by the generic
biproduct composite rather than by touching entries; the same composite
powers :func:`mat_add`, which the shortest-path command uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import (
    SEMIRINGS,
    Scalar,
    SemiringDescriptor,
    parse_scalar,
    render_scalar,
)
from .errors import (
    DimensionMismatch,
    FormatError,
    IndexOutOfRange,
    NoInvolution,
    TagMismatch,
)

__all__ = [
    "Matrix",
    "matrix",
    "Aleph0Map",
    "aleph0_compose",
    "MatTheory",
    "mat_identity",
    "mat_compose",
    "mat_structural",
    "mat_coproj1",
    "mat_coproj2",
    "mat_proj1",
    "mat_proj2",
    "mat_cotuple",
    "mat_tuple",
    "mat_add",
    "coord",
    "mat_tensor",
    "mat_dagger",
    "aleph0_embed",
    "homset_semiring",
    "parse_mat_text",
    "render_mat_text",
]


@dataclass(frozen=True, eq=False)
class Matrix:
    """A morphism rows -> cols of the matrix theory of ``semiring``.

    ``entries`` holds rows*cols values of the entry semiring in row-major
    order; for the scalar built-ins these are :class:`Scalar` values, while
    synthesized semirings (hom-set or evaluation descriptors) supply their
    own value type. Equality compares tag, shape, and entries.
    """

    semiring: SemiringDescriptor
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be naturals")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries,"
                f" got {len(self.entries)}"
            )

    @property
    def tag(self) -> str:
        return self.semiring.tag if self.semiring.tag is not None else self.semiring.name

    def entry(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i},{j}) of a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.tag == other.tag
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(("matrix", self.tag, self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        body = ",".join(
            "[" + ",".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)
        )
        return f"[{body}]"


def matrix(S: SemiringDescriptor, rows: Sequence[Sequence]) -> Matrix:
    """Build a matrix from a list of rows, validating shape and tags."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    flat = []
    for r in rows:
        if len(r) != m:
            raise DimensionMismatch("ragged rows")
        flat.extend(r)
    if S.tag is not None:
        for e in flat:
            if not isinstance(e, Scalar) or e.tag != S.tag:
                raise TagMismatch(f"entry {e!r} does not carry tag {S.tag!r}")
    return Matrix(S, n, m, tuple(flat))


def _same_theory(g: Matrix, h: Matrix) -> SemiringDescriptor:
    if g.tag != h.tag:
        raise TagMismatch(f"matrices over {g.tag} and {h.tag} cannot be combined")
    return g.semiring


def mat_identity(S: SemiringDescriptor, n: int) -> Matrix:
    return Matrix(
        S, n, n, tuple(S.one if i == j else S.zero for i in range(n) for j in range(n))
    )


def mat_compose(g: Matrix, h: Matrix) -> Matrix:
    """The composite "g then h" (g: n -> m, h: m -> p)."""
    S = _same_theory(g, h)
    if g.cols != h.rows:
        raise DimensionMismatch(
            f"cannot compose {g.rows}x{g.cols} with {h.rows}x{h.cols}"
        )
    entries = []
    for i in range(g.rows):
        for k in range(h.cols):
            acc = S.zero
            for j in range(g.cols):
                acc = S.add(acc, S.mul(g.entry(i, j), h.entry(j, k)))
            entries.append(acc)
    return Matrix(S, g.rows, h.cols, tuple(entries))


def mat_coproj1(S: SemiringDescriptor, n: int, m: int) -> Matrix:
    return Matrix(
        S, n, n + m,
        tuple(S.one if i == j else S.zero for i in range(n) for j in range(n + m)),
    )


def mat_coproj2(S: SemiringDescriptor, n: int, m: int) -> Matrix:
    return Matrix(
        S, m, n + m,
        tuple(S.one if j == n + i else S.zero for i in range(m) for j in range(n + m)),
    )


def mat_proj1(S: SemiringDescriptor, n: int, m: int) -> Matrix:
    return Matrix(
        S, n + m, n,
        tuple(S.one if i == j else S.zero for i in range(n + m) for j in range(n)),
    )


def mat_proj2(S: SemiringDescriptor, n: int, m: int) -> Matrix:
    return Matrix(
        S, n + m, m,
        tuple(S.one if i == n + j else S.zero for i in range(n + m) for j in range(m)),
    )


def mat_cotuple(f: Matrix, g: Matrix) -> Matrix:
    """[f, g]: stack rows; both maps must share the codomain."""
    S = _same_theory(f, g)
    if f.cols != g.cols:
        raise DimensionMismatch("cotuple needs a common codomain")
    return Matrix(S, f.rows + g.rows, f.cols, f.entries + g.entries)


def mat_tuple(f: Matrix, g: Matrix) -> Matrix:
    """<f, g>: juxtapose columns; both maps must share the domain."""
    S = _same_theory(f, g)
    if f.rows != g.rows:
        raise DimensionMismatch("tuple needs a common domain")
    entries = []
    for i in range(f.rows):
        entries.extend(f.row(i))
        entries.extend(g.row(i))
    return Matrix(S, f.rows, f.cols + g.cols, tuple(entries))


def mat_structural(kind: str, *args) -> Matrix:
    """Dispatch for the structural matrices of the biproduct."""
    table: dict[str, Callable[..., Matrix]] = {
        "coproj1": mat_coproj1,
        "coproj2": mat_coproj2,
        "proj1": mat_proj1,
        "proj2": mat_proj2,
        "cotuple": mat_cotuple,
        "tuple": mat_tuple,
    }
    try:
        build = table[kind]
    except KeyError:
        raise ValueError(f"unknown structural kind {kind!r}") from None
    return build(*args)


def mat_add(f: Matrix, g: Matrix) -> Matrix:
    """Hom-set addition as the biproduct composite: the diagonal, then the
    block sum of f and g, then the codiagonal. Agrees with entrywise
    addition, which the tests confirm; this function never touches entries
    directly."""
    S = _same_theory(f, g)
    if f.rows != g.rows or f.cols != g.cols:
        raise DimensionMismatch("can only add parallel matrices")
    n, m = f.rows, f.cols
    diag = mat_tuple(mat_identity(S, n), mat_identity(S, n))
    blocked = mat_cotuple(
        mat_compose(f, mat_coproj1(S, m, m)),
        mat_compose(g, mat_coproj2(S, m, m)),
    )
    codiag = mat_cotuple(mat_identity(S, m), mat_identity(S, m))
    return mat_compose(mat_compose(diag, blocked), codiag)


def coord(n: int, m: int, direction: str, arg):
    """The coordinatisation c = a*m + b between {0..n*m-1} and pairs."""
    if direction == "split":
        c = arg
        if not (0 <= c < n * m):
            raise IndexOutOfRange(f"index {c} not below {n}*{m}")
        return (c // m, c % m)
    if direction == "join":
        a, b = arg
        if not (0 <= a < n and 0 <= b < m):
            raise IndexOutOfRange(f"pair ({a},{b}) not inside {n}x{m}")
        return a * m + b
    raise ValueError(f"direction must be 'split' or 'join', got {direction!r}")


def mat_tensor(g: Matrix, h: Matrix) -> Matrix:
    """Tensor of g: m -> p with h: n -> q, flattened by the fixed
    coordinatisation on rows (inner factor n) and columns (inner factor q)."""
    S = _same_theory(g, h)
    m, p = g.rows, g.cols
    n, q = h.rows, h.cols
    entries = []
    for c in range(m * n):
        i0, i1 = coord(m, n, "split", c)
        for d in range(p * q):
            j0, j1 = coord(p, q, "split", d)
            entries.append(S.mul(g.entry(i0, j0), h.entry(i1, j1)))
    return Matrix(S, m * n, p * q, tuple(entries))


def mat_dagger(f: Matrix) -> Matrix:
    """Starred transpose."""
    S = f.semiring
    if S.star is None:
        raise NoInvolution(f"semiring {S.name} has no star")
    entries = tuple(
        S.star(f.entry(i, j)) for j in range(f.cols) for i in range(f.rows)
    )
    return Matrix(S, f.cols, f.rows, entries)


# ---------------------------------------------------------------------------
# Finite functions and their embedding


@dataclass(frozen=True)
class Aleph0Map:
    """A plain function {0..dom-1} -> {0..cod-1}, given by its value table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom:
            raise DimensionMismatch("table length must equal the domain size")
        for v in self.table:
            if not (0 <= v < self.cod):
                raise IndexOutOfRange(f"table value {v} not below {self.cod}")

    def __call__(self, i: int) -> int:
        if not (0 <= i < self.dom):
            raise IndexOutOfRange(f"argument {i} not below {self.dom}")
        return self.table[i]


def aleph0_compose(f: Aleph0Map, g: Aleph0Map) -> Aleph0Map:
    """The function "f then g"."""
    if f.cod != g.dom:
        raise DimensionMismatch("functions do not compose")
    return Aleph0Map(f.dom, g.cod, tuple(g(f(i)) for i in range(f.dom)))


def aleph0_embed(f: Aleph0Map, S: SemiringDescriptor) -> Matrix:
    """The 0/1 matrix of a function; identity on objects and functorial."""
    return Matrix(
        S,
        f.dom,
        f.cod,
        tuple(
            S.one if f(i) == j else S.zero for i in range(f.dom) for j in range(f.cod)
        ),
    )


# ---------------------------------------------------------------------------
# The hom(1,1) semiring


@dataclass(frozen=True, eq=False)
class MatTheory:
    """Handle for the matrix theory of a semiring."""

    semiring: SemiringDescriptor

    @property
    def name(self) -> str:
        return f"mat({self.semiring.name})"


def homset_semiring(L: MatTheory | SemiringDescriptor) -> SemiringDescriptor:
    """The semiring of endomaps of 1 in a matrix theory.

    Multiplication is composition; addition is the generic biproduct
    composite (diagonal, block sum, codiagonal); zero is the unique map
    through the object 0; star, when the theory has a dagger, is the
    dagger of an endomap.
    """
    S = L.semiring if isinstance(L, MatTheory) else L
    one = mat_identity(S, 1)
    zero = mat_compose(Matrix(S, 1, 0, ()), Matrix(S, 0, 1, ()))
    return SemiringDescriptor(
        name=f"hom1(mat({S.name}))",
        add=mat_add,
        zero=zero,
        mul=mat_compose,
        one=one,
        star=(lambda a: mat_dagger(a)) if S.star is not None else None,
        tag=None,
    )


# ---------------------------------------------------------------------------
# The .mat text format

_TOKEN_RE = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def parse_mat_text(text: str) -> Matrix:
    """Parse the matrix file format.

    Line 1 is ``semiring <name> <rows> <cols>``; each following line holds
    one row of scalars in the semiring's text grammar. Errors carry the
    offending line and column.
    """
    lines = text.splitlines()
    if not lines:
        raise FormatError("line 1, column 1: empty matrix file")
    header = _tokens(lines[0])
    if len(header) != 4 or header[0][0] != "semiring":
        raise FormatError("line 1, column 1: expected 'semiring <name> <rows> <cols>'")
    name = header[1][0]
    if name not in SEMIRINGS:
        raise FormatError(f"line 1, column {header[1][1]}: unknown semiring {name!r}")
    S = SEMIRINGS[name]
    try:
        rows, cols = int(header[2][0]), int(header[3][0])
        if rows < 0 or cols < 0:
            raise ValueError
    except ValueError:
        raise FormatError(
            f"line 1, column {header[2][1]}: rows and cols must be naturals"
        ) from None

    entries = []
    for i in range(rows):
        lineno = i + 2
        if lineno - 1 >= len(lines):
            raise FormatError(f"line {lineno}, column 1: missing row {i}")
        toks = _tokens(lines[lineno - 1])
        if len(toks) != cols:
            col = toks[cols][1] if len(toks) > cols else (toks[-1][1] if toks else 1)
            raise FormatError(
                f"line {lineno}, column {col}: expected {cols} entries, got {len(toks)}"
            )
        for text_tok, col in toks:
            try:
                entries.append(parse_scalar(S, text_tok))
            except FormatError as exc:
                raise FormatError(f"line {lineno}, column {col}: {exc}") from None
    for extra in range(rows + 2, len(lines) + 1):
        if lines[extra - 1].strip():
            raise FormatError(f"line {extra}, column 1: unexpected trailing content")
    return Matrix(S, rows, cols, tuple(entries))


def render_mat_text(m: Matrix) -> str:
    """Render a matrix over a built-in scalar semiring; inverse of
    :func:`parse_mat_text`, byte for byte."""
    if m.tag not in SEMIRINGS:
        raise FormatError(f"semiring {m.tag!r} has no file rendering")
    lines = [f"semiring {m.tag} {m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(render_scalar(e) for e in m.row(i)))
    return "\n".join(lines) + "\n"
