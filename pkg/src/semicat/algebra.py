"""Exact scalars, semiring/monoid operation tables, and sampled law checks.

Values are exact: arbitrary-precision integers, ``fractions.Fraction``,
pairs of fractions for gaussian rationals, and a distinct infinity token
for the tropical semiring. No floating point exists anywhere in this
package, so value equality is structural and decidable, which is what the
law checkers rely on.

A :class:`SemiringDescriptor` is a pure operation table. The five built-in
instances (``nat``, ``bool``, ``tropical``, ``ratnn``, ``gaussian``) operate
on :class:`Scalar` values and enforce tag discipline; synthesized
descriptors produced elsewhere in the package (homset semirings, evaluation
of a monad at the one-point set) reuse the same dataclass with ``tag=None``
and carry whatever value type their construction dictates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Sequence

from .errors import (
    FormatError,
    MonoidMismatch,
    NoInvolution,
    TagMismatch,
    UnknownSemiring,
)

__all__ = [
    "Scalar",
    "Word",
    "SemiringDescriptor",
    "MonoidDescriptor",
    "LawResult",
    "LawReport",
    "nat",
    "boolean",
    "tropical",
    "rational",
    "gaussian",
    "word",
    "NAT",
    "BOOL",
    "TROPICAL",
    "RATNN",
    "GAUSSIAN",
    "FREE_WORDS",
    "SEMIRINGS",
    "MONOIDS",
    "semiring_by_name",
    "monoid_by_name",
    "multiplicative_monoid",
    "additive_monoid",
    "scalar_eval",
    "check_semiring_laws",
    "check_monoid_laws",
    "canonical_from_nat",
    "parse_scalar",
    "render_scalar",
]


# ---------------------------------------------------------------------------
# Scalar values


@dataclass(frozen=True)
class Scalar:
    """An exact element of a named semiring.

    ``payload`` is canonical by construction: ints for ``nat``, bool for
    ``bool``, ``int | None`` for ``tropical`` (``None`` is the infinity
    token), a reduced ``Fraction`` for ``ratnn``, and a pair of reduced
    fractions ``(re, im)`` for ``gaussian``. Use the module constructors
    (:func:`nat`, :func:`tropical`, ...) rather than instantiating directly.
    """

    tag: str
    payload: object

    def sort_key(self) -> tuple:
        if self.tag == "tropical":
            inner = (1, 0) if self.payload is None else (0, self.payload)
        elif self.tag == "bool":
            inner = (int(self.payload),)
        elif self.tag == "gaussian":
            inner = self.payload  # (re, im) pair of Fractions
        else:
            inner = (self.payload,)
        return ("scalar", self.tag, inner)

    def __lt__(self, other: "Scalar") -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_scalar(self)


def nat(n: int) -> Scalar:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"natural number expected, got {n!r}")
    return Scalar("nat", n)


def boolean(b: bool) -> Scalar:
    return Scalar("bool", bool(b))


def tropical(v: int | None) -> Scalar:
    """Tropical scalar: an integer weight, or ``None`` for infinity."""
    if v is not None and (not isinstance(v, int) or isinstance(v, bool)):
        raise ValueError(f"tropical payload must be int or None, got {v!r}")
    return Scalar("tropical", v)


def rational(value) -> Scalar:
    q = Fraction(value)
    if q < 0:
        raise ValueError(f"nonnegative rational expected, got {q}")
    return Scalar("ratnn", q)


def gaussian(re_part=0, im_part=0) -> Scalar:
    return Scalar("gaussian", (Fraction(re_part), Fraction(im_part)))


@dataclass(frozen=True)
class Word:
    """Element of a free monoid: a finite string of letters."""

    letters: tuple[str, ...]

    def sort_key(self) -> tuple:
        return ("word", self.letters)

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters < other.letters

    def __str__(self) -> str:
        return "".join(self.letters) if self.letters else "eps"


def word(text: str) -> Word:
    return Word(tuple(text))


# ---------------------------------------------------------------------------
# Descriptors


@dataclass(frozen=True, eq=False)
class SemiringDescriptor:
    """Operation table of a commutative semiring, optionally with a star.

    ``tag`` is set for the scalar built-ins and gates tag checking in the
    operations; descriptors synthesized over other value types leave it
    ``None``.
    """

    name: str
    add: Callable
    zero: object
    mul: Callable
    one: object
    star: Callable | None = None
    tag: str | None = None


@dataclass(frozen=True, eq=False)
class MonoidDescriptor:
    """Operation table of a monoid. ``commutative`` is a claim, not a fact;
    :func:`check_monoid_laws` and the suites are what verify it.
    ``member`` optionally recognizes elements, for mismatch errors."""

    name: str
    op: Callable
    unit: object
    commutative: bool
    member: Callable[[object], bool] | None = None

    def check_member(self, m: object) -> None:
        if self.member is not None and not self.member(m):
            raise MonoidMismatch(f"{m!r} is not an element of monoid {self.name}")


# ---------------------------------------------------------------------------
# Built-in semirings


def _payload(s: Scalar, tag: str):
    if not isinstance(s, Scalar) or s.tag != tag:
        raise TagMismatch(f"expected a {tag} scalar, got {s!r}")
    return s.payload


def _nat_add(a: Scalar, b: Scalar) -> Scalar:
    return nat(_payload(a, "nat") + _payload(b, "nat"))


def _nat_mul(a: Scalar, b: Scalar) -> Scalar:
    return nat(_payload(a, "nat") * _payload(b, "nat"))


def _identity_star(tag: str) -> Callable:
    def star(a: Scalar) -> Scalar:
        _payload(a, tag)
        return a

    return star


NAT = SemiringDescriptor(
    name="nat",
    add=_nat_add,
    zero=nat(0),
    mul=_nat_mul,
    one=nat(1),
    star=_identity_star("nat"),
    tag="nat",
)


def _bool_add(a: Scalar, b: Scalar) -> Scalar:
    return boolean(_payload(a, "bool") or _payload(b, "bool"))


def _bool_mul(a: Scalar, b: Scalar) -> Scalar:
    return boolean(_payload(a, "bool") and _payload(b, "bool"))


BOOL = SemiringDescriptor(
    name="bool",
    add=_bool_add,
    zero=boolean(False),
    mul=_bool_mul,
    one=boolean(True),
    star=_identity_star("bool"),
    tag="bool",
)


def _trop_add(a: Scalar, b: Scalar) -> Scalar:
    x, y = _payload(a, "tropical"), _payload(b, "tropical")
    if x is None:
        return b
    if y is None:
        return a
    return tropical(min(x, y))


def _trop_mul(a: Scalar, b: Scalar) -> Scalar:
    x, y = _payload(a, "tropical"), _payload(b, "tropical")
    if x is None or y is None:
        return tropical(None)
    return tropical(x + y)


TROPICAL = SemiringDescriptor(
    name="tropical",
    add=_trop_add,
    zero=tropical(None),
    mul=_trop_mul,
    one=tropical(0),
    star=_identity_star("tropical"),
    tag="tropical",
)


def _ratnn_add(a: Scalar, b: Scalar) -> Scalar:
    return rational(_payload(a, "ratnn") + _payload(b, "ratnn"))


def _ratnn_mul(a: Scalar, b: Scalar) -> Scalar:
    return rational(_payload(a, "ratnn") * _payload(b, "ratnn"))


RATNN = SemiringDescriptor(
    name="ratnn",
    add=_ratnn_add,
    zero=rational(0),
    mul=_ratnn_mul,
    one=rational(1),
    star=_identity_star("ratnn"),
    tag="ratnn",
)


def _gauss_add(a: Scalar, b: Scalar) -> Scalar:
    (ar, ai), (br, bi) = _payload(a, "gaussian"), _payload(b, "gaussian")
    return gaussian(ar + br, ai + bi)


def _gauss_mul(a: Scalar, b: Scalar) -> Scalar:
    (ar, ai), (br, bi) = _payload(a, "gaussian"), _payload(b, "gaussian")
    return gaussian(ar * br - ai * bi, ar * bi + ai * br)


def _gauss_star(a: Scalar) -> Scalar:
    re_part, im_part = _payload(a, "gaussian")
    return gaussian(re_part, -im_part)


GAUSSIAN = SemiringDescriptor(
    name="gaussian",
    add=_gauss_add,
    zero=gaussian(0, 0),
    mul=_gauss_mul,
    one=gaussian(1, 0),
    star=_gauss_star,
    tag="gaussian",
)


SEMIRINGS: dict[str, SemiringDescriptor] = {
    d.name: d for d in (NAT, BOOL, TROPICAL, RATNN, GAUSSIAN)
}


def semiring_by_name(name: str) -> SemiringDescriptor:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise UnknownSemiring(
            f"unknown semiring {name!r}; known: {', '.join(sorted(SEMIRINGS))}"
        ) from None


# ---------------------------------------------------------------------------
# Built-in monoids


def _word_op(a: Word, b: Word) -> Word:
    if not isinstance(a, Word) or not isinstance(b, Word):
        raise MonoidMismatch(f"free-word op expects words, got {a!r}, {b!r}")
    return Word(a.letters + b.letters)


FREE_WORDS = MonoidDescriptor(
    name="free-words",
    op=_word_op,
    unit=Word(()),
    commutative=False,
    member=lambda m: isinstance(m, Word),
)


def multiplicative_monoid(desc: SemiringDescriptor) -> MonoidDescriptor:
    """The multiplicative monoid sitting inside a semiring."""
    return MonoidDescriptor(
        name=f"{desc.name}-mul",
        op=desc.mul,
        unit=desc.one,
        commutative=True,
        member=lambda m, t=desc.tag: isinstance(m, Scalar) and m.tag == t,
    )


def additive_monoid(desc: SemiringDescriptor) -> MonoidDescriptor:
    return MonoidDescriptor(
        name=f"{desc.name}-add",
        op=desc.add,
        unit=desc.zero,
        commutative=True,
        member=lambda m, t=desc.tag: isinstance(m, Scalar) and m.tag == t,
    )


MONOIDS: dict[str, MonoidDescriptor] = {
    "nat-mul": multiplicative_monoid(NAT),
    "nat-add": additive_monoid(NAT),
    "free-words": FREE_WORDS,
}


def monoid_by_name(name: str) -> MonoidDescriptor:
    try:
        return MONOIDS[name]
    except KeyError:
        raise UnknownSemiring(
            f"unknown monoid {name!r}; known: {', '.join(sorted(MONOIDS))}"
        ) from None


# ---------------------------------------------------------------------------
# Evaluation and law checking


def scalar_eval(desc: SemiringDescriptor, op: str, *args: Scalar) -> Scalar:
    """Apply one of a descriptor's named operations to scalar arguments.

    Arguments must carry the descriptor's tag; ``star`` is only legal when
    the descriptor has one.
    """
    if desc.tag is not None:
        for a in args:
            if not isinstance(a, Scalar) or a.tag != desc.tag:
                raise TagMismatch(f"{a!r} does not carry tag {desc.tag!r}")
    if op == "add":
        a, b = args
        return desc.add(a, b)
    if op == "mul":
        a, b = args
        return desc.mul(a, b)
    if op == "star":
        if desc.star is None:
            raise NoInvolution(f"semiring {desc.name} has no star")
        (a,) = args
        return desc.star(a)
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class LawReport:
    subject: str
    results: tuple[LawResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.law}")
            if r.counterexample is not None:
                lines.append(f"  {r.counterexample}")
        return "\n".join(lines)


def _first_failure(
    law: str, cases: Iterable[tuple], check: Callable[..., bool], show: Callable[..., str]
) -> LawResult:
    for case in cases:
        if not check(*case):
            return LawResult(law, False, show(*case))
    return LawResult(law, True)


def check_semiring_laws(
    desc: SemiringDescriptor, samples: Sequence
) -> LawReport:
    """Check the commutative-semiring laws (and star laws when present)
    over all pairs and triples drawn from ``samples``.

    The first counterexample found for each law is recorded in the report.
    """
    if not samples:
        raise ValueError("samples must be nonempty")
    if desc.tag is not None:
        for s in samples:
            if not isinstance(s, Scalar) or s.tag != desc.tag:
                raise TagMismatch(f"sample {s!r} does not carry tag {desc.tag!r}")

    add, mul, zero, one = desc.add, desc.mul, desc.zero, desc.one
    pairs = [(s, t) for s in samples for t in samples]
    triples = [(s, t, r) for s in samples for t in samples for r in samples]
    singles = [(s,) for s in samples]

    results = [
        _first_failure(
            "add-commutative", pairs,
            lambda s, t: add(s, t) == add(t, s),
            lambda s, t: f"s={s} t={t}: {add(s, t)} != {add(t, s)}",
        ),
        _first_failure(
            "add-associative", triples,
            lambda s, t, r: add(add(s, t), r) == add(s, add(t, r)),
            lambda s, t, r: f"s={s} t={t} r={r}",
        ),
        _first_failure(
            "add-unit", singles,
            lambda s: add(s, zero) == s and add(zero, s) == s,
            lambda s: f"s={s}",
        ),
        _first_failure(
            "mul-commutative", pairs,
            lambda s, t: mul(s, t) == mul(t, s),
            lambda s, t: f"s={s} t={t}: {mul(s, t)} != {mul(t, s)}",
        ),
        _first_failure(
            "mul-associative", triples,
            lambda s, t, r: mul(mul(s, t), r) == mul(s, mul(t, r)),
            lambda s, t, r: f"s={s} t={t} r={r}",
        ),
        _first_failure(
            "mul-unit", singles,
            lambda s: mul(s, one) == s and mul(one, s) == s,
            lambda s: f"s={s}",
        ),
        _first_failure(
            "zero-annihilates", singles,
            lambda s: mul(s, zero) == zero and mul(zero, s) == zero,
            lambda s: f"s={s}",
        ),
        _first_failure(
            "distributive", triples,
            lambda s, t, r: mul(s, add(t, r)) == add(mul(s, t), mul(s, r)),
            lambda s, t, r: f"s={s} t={t} r={r}",
        ),
    ]
    if desc.star is not None:
        star = desc.star
        results += [
            _first_failure(
                "star-preserves-add", pairs,
                lambda s, t: star(add(s, t)) == add(star(s), star(t)),
                lambda s, t: f"s={s} t={t}",
            ),
            _first_failure(
                "star-preserves-mul", pairs,
                lambda s, t: star(mul(s, t)) == mul(star(s), star(t)),
                lambda s, t: f"s={s} t={t}",
            ),
            _first_failure(
                "star-involutive", singles,
                lambda s: star(star(s)) == s,
                lambda s: f"s={s}",
            ),
            LawResult("star-fixes-zero", star(zero) == zero),
            LawResult("star-fixes-one", star(one) == one),
        ]
    return LawReport(subject=desc.name, results=tuple(results))


def check_monoid_laws(desc: MonoidDescriptor, samples: Sequence) -> LawReport:
    """Associativity and unit laws over the samples; commutativity is
    checked only when the descriptor claims it."""
    if not samples:
        raise ValueError("samples must be nonempty")
    op, unit = desc.op, desc.unit
    triples = [(s, t, r) for s in samples for t in samples for r in samples]
    singles = [(s,) for s in samples]
    results = [
        _first_failure(
            "op-associative", triples,
            lambda s, t, r: op(op(s, t), r) == op(s, op(t, r)),
            lambda s, t, r: f"s={s} t={t} r={r}",
        ),
        _first_failure(
            "unit-neutral", singles,
            lambda s: op(s, unit) == s and op(unit, s) == s,
            lambda s: f"s={s}",
        ),
    ]
    if desc.commutative:
        pairs = [(s, t) for s in samples for t in samples]
        results.append(
            _first_failure(
                "op-commutative", pairs,
                lambda s, t: op(s, t) == op(t, s),
                lambda s, t: f"s={s} t={t}: {op(s, t)} != {op(t, s)}",
            )
        )
    return LawReport(subject=desc.name, results=tuple(results))


def canonical_from_nat(desc: SemiringDescriptor, n: int) -> Scalar:
    """The n-fold sum of the descriptor's one (empty sum gives zero).

    The induced map from the naturals is a semiring homomorphism, which the
    tests verify on samples; it is how homomorphism witnesses get generated
    for the adjunction round-trips.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    return reduce(desc.add, [desc.one] * n, desc.zero)


# ---------------------------------------------------------------------------
# Scalar text grammar

_NAT_RE = re.compile(r"\d+$")
_INT_RE = re.compile(r"-?\d+$")
_RAT_RE = re.compile(r"(-?\d+)(?:/(\d+))?$")


def _parse_fraction(text: str, original: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise FormatError(f"bad rational literal {original!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def _parse_gaussian(text: str) -> Scalar:
    body = text
    if not body:
        raise FormatError("empty gaussian literal")
    if body.endswith("i"):
        body = body[:-1]
        # split real and imaginary parts at the last top-level sign
        sep = -1
        for idx in range(1, len(body)):
            if body[idx] in "+-":
                sep = idx
        if sep >= 0:
            re_text, im_text = body[:sep], body[sep:]
        else:
            re_text, im_text = "", body
        if im_text in ("", "+"):
            im_part = Fraction(1)
        elif im_text == "-":
            im_part = Fraction(-1)
        else:
            im_part = _parse_fraction(im_text.lstrip("+"), text)
        re_part = _parse_fraction(re_text, text) if re_text else Fraction(0)
        return gaussian(re_part, im_part)
    return gaussian(_parse_fraction(body, text), 0)


def parse_scalar(desc: SemiringDescriptor | str, text: str) -> Scalar:
    """Parse a scalar literal in the named semiring's text grammar.

    Grammar per semiring: ``nat`` unsigned integers; ``bool`` ``0``/``1``;
    ``tropical`` a signed integer or ``inf``; ``ratnn`` ``p`` or ``p/q``;
    ``gaussian`` ``re``, ``imi``, or ``re+imi`` with rational parts
    (``i`` alone means the imaginary unit).
    """
    name = desc if isinstance(desc, str) else desc.name
    text = text.strip()
    if name == "nat":
        if not _NAT_RE.match(text):
            raise FormatError(f"bad natural literal {text!r}")
        return nat(int(text))
    if name == "bool":
        if text not in ("0", "1"):
            raise FormatError(f"bad boolean literal {text!r} (want 0 or 1)")
        return boolean(text == "1")
    if name == "tropical":
        if text == "inf":
            return tropical(None)
        if not _INT_RE.match(text):
            raise FormatError(f"bad tropical literal {text!r}")
        return tropical(int(text))
    if name == "ratnn":
        q = _parse_fraction(text, text)
        if q < 0:
            raise FormatError(f"negative literal {text!r} in nonnegative-rational semiring")
        return rational(q)
    if name == "gaussian":
        return _parse_gaussian(text)
    raise UnknownSemiring(f"no scalar grammar for semiring {name!r}")


def _render_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(s: Scalar) -> str:
    """Canonical text of a scalar; inverse of :func:`parse_scalar`."""
    if s.tag == "nat":
        return str(s.payload)
    if s.tag == "bool":
        return "1" if s.payload else "0"
    if s.tag == "tropical":
        return "inf" if s.payload is None else str(s.payload)
    if s.tag == "ratnn":
        return _render_fraction(s.payload)
    if s.tag == "gaussian":
        re_part, im_part = s.payload
        if im_part == 0:
            return _render_fraction(re_part)
        if im_part == 1:
            im_text = "i"
        elif im_part == -1:
            im_text = "-i"
        else:
            im_text = f"{_render_fraction(im_part)}i"
        if re_part == 0:
            return im_text
        sign = "+" if im_part > 0 else ""
        return f"{_render_fraction(re_part)}{sign}{im_text}"
    raise UnknownSemiring(f"no renderer for tag {s.tag!r}")
