"""Finite-set monads with strength, additivity, and involution.

Two monad families are implemented concretely: the multiset monad of a
commutative semiring S (values are finitely supported maps into S) and the
action monad of a monoid M (values are pairs of a monoid element and a
point). Everything else in this module is built generically from a
:class:`MonadInstance`'s unit/fmap/mult/strength, on purpose: the derived
operations (double strength, value addition, the scalar action, evaluation
at the one-point set) are computed as the abstract composites and the test
suites check that they agree with the direct formulas.

Set elements are encoded by the :class:`Elem` tree, which is totally
ordered, so nested values like multisets of multisets stay canonical and
usable as association keys.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .algebra import (
    MonoidDescriptor,
    Scalar,
    SemiringDescriptor,
    Word,
)
from .errors import (
    CarrierMismatch,
    ElementOutsideCarrier,
    KeyNotMultiset,
    MonoidMismatch,
    NoInvolution,
    NotAdditive,
    NotCommutative,
    TagMismatch,
)

__all__ = [
    "Elem",
    "Atom",
    "Star",
    "STAR",
    "Pair",
    "Inl",
    "Inr",
    "MsVal",
    "ActVal",
    "ActValue",
    "FiniteCarrier",
    "carrier",
    "index_carrier",
    "CarrierMap",
    "Multiset",
    "ms_from_pairs",
    "multiplicity",
    "MonadInstance",
    "MultisetMonad",
    "ActionMonad",
    "ms_fmap",
    "ms_unit",
    "ms_mult",
    "ms_dst",
    "ms_involution",
    "ms_map_scalars",
    "generic_strength",
    "swapped_strength",
    "bicartesian",
    "tx_add",
    "tx_zero",
    "scalar_action",
    "eval_at_one",
    "action_unit_mult",
    "dst_strength_first",
    "dst_swapped_first",
    "commutativity_witness",
    "CommutativityReport",
    "render_elem",
    "render_multiset",
]


# ---------------------------------------------------------------------------
# Elements


class Elem:
    """Base of the universal element encoding.

    Subclasses are frozen dataclasses; ordering is lexicographic on the
    constructor, then on the fields, via :meth:`key`.
    """

    __slots__ = ()

    def key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: "Elem") -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.key() < other.key()

    def __le__(self, other: "Elem") -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.key() <= other.key()

    def __gt__(self, other: "Elem") -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.key() > other.key()

    def __ge__(self, other: "Elem") -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.key() >= other.key()


@dataclass(frozen=True)
class Atom(Elem):
    """A named (or numbered) urelement."""

    name: str | int

    def key(self) -> tuple:
        if isinstance(self.name, str):
            return ("atom", 1, self.name)
        return ("atom", 0, self.name)


@dataclass(frozen=True)
class Star(Elem):
    """The unique element of the one-point set."""

    def key(self) -> tuple:
        return ("star",)


STAR = Star()


@dataclass(frozen=True)
class Pair(Elem):
    left: Elem
    right: Elem

    def key(self) -> tuple:
        return ("pair", self.left.key(), self.right.key())


@dataclass(frozen=True)
class Inl(Elem):
    value: Elem

    def key(self) -> tuple:
        return ("suml", self.value.key())


@dataclass(frozen=True)
class Inr(Elem):
    value: Elem

    def key(self) -> tuple:
        return ("sumr", self.value.key())


def _melem_key(m) -> tuple:
    # monoid elements are scalars or words; both provide sort_key
    return m.sort_key()


@dataclass(frozen=True)
class MsVal(Elem):
    """A multiset embedded as an element, for nesting T(T(X))."""

    ms: "Multiset"

    def key(self) -> tuple:
        return ("msval", self.ms.sort_key())


@dataclass(frozen=True)
class ActVal(Elem):
    """An action-monad value (monoid element and point), usable as an Elem."""

    m: object
    elem: Elem

    def key(self) -> tuple:
        return ("actval", _melem_key(self.m), self.elem.key())


ActValue = ActVal


# ---------------------------------------------------------------------------
# Carriers and maps between them


@dataclass(frozen=True, eq=False)
class FiniteCarrier:
    """A finite set: strictly sorted tuple of distinct elements."""

    elems: tuple[Elem, ...]

    def __post_init__(self) -> None:
        keys = [e.key() for e in self.elems]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("carrier elements must be strictly sorted and distinct")

    def __iter__(self):
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, e: Elem) -> bool:
        return e in self.elems

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteCarrier) and self.elems == other.elems

    def __hash__(self) -> int:
        return hash(("carrier", self.elems))


def carrier(elems: Iterable[Elem]) -> FiniteCarrier:
    """Build a carrier from any iterable of elements (sorted, must be distinct)."""
    ordered = sorted(elems, key=lambda e: e.key())
    return FiniteCarrier(tuple(ordered))


def index_carrier(n: int) -> FiniteCarrier:
    """The n-element carrier {Atom(0), ..., Atom(n-1)}."""
    return FiniteCarrier(tuple(Atom(i) for i in range(n)))


@dataclass(frozen=True, eq=False)
class CarrierMap:
    """A function between carriers given by an explicit table."""

    dom: FiniteCarrier
    cod: FiniteCarrier
    table: tuple[tuple[Elem, Elem], ...]

    def __post_init__(self) -> None:
        lookup = {}
        for x, y in self.table:
            if x not in self.dom:
                raise ElementOutsideCarrier(f"table key {render_elem(x)} not in the domain")
            if y not in self.cod:
                raise ElementOutsideCarrier(f"table value {render_elem(y)} not in the codomain")
            lookup[x] = y
        for x in self.dom:
            if x not in lookup:
                raise ElementOutsideCarrier(f"table misses domain element {render_elem(x)}")
        object.__setattr__(self, "_lookup", lookup)

    def __call__(self, x: Elem) -> Elem:
        try:
            return self._lookup[x]
        except KeyError:
            raise ElementOutsideCarrier(f"{render_elem(x)} is outside the map's domain") from None


def carrier_map(dom: FiniteCarrier, cod: FiniteCarrier, assign: dict | Callable) -> CarrierMap:
    if callable(assign) and not isinstance(assign, dict):
        table = tuple((x, assign(x)) for x in dom)
    else:
        table = tuple(assign.items())
    return CarrierMap(dom, cod, table)


# ---------------------------------------------------------------------------
# Multisets


@dataclass(frozen=True, eq=False)
class Multiset:
    """Finitely supported map from elements to nonzero semiring values.

    Entries are sorted by element key and never contain the zero scalar, so
    extensional equality of the maps is structural equality of the tuples.
    """

    semiring: SemiringDescriptor
    entries: tuple[tuple[Elem, object], ...]

    @property
    def tag(self) -> str:
        return self.semiring.tag if self.semiring.tag is not None else self.semiring.name

    def support(self) -> tuple[Elem, ...]:
        return tuple(x for x, _ in self.entries)

    def sort_key(self) -> tuple:
        return (
            "multiset",
            self.tag,
            tuple((x.key(), _scalar_key(s)) for x, s in self.entries),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multiset)
            and self.tag == other.tag
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(("multiset", self.tag, self.entries))

    def __str__(self) -> str:
        return render_multiset(self)


def _scalar_key(s) -> tuple:
    if hasattr(s, "sort_key"):
        return s.sort_key()
    return ("opaque", repr(s))


def ms_from_pairs(S: SemiringDescriptor, pairs: Iterable[tuple[Elem, object]]) -> Multiset:
    """Canonicalize (element, value) pairs into a multiset: equal elements
    are merged with the semiring addition and zero entries are dropped."""
    acc: dict[Elem, object] = {}
    for x, s in pairs:
        if not isinstance(x, Elem):
            raise ElementOutsideCarrier(f"multiset key {x!r} is not an element")
        if x in acc:
            acc[x] = S.add(acc[x], s)
        else:
            acc[x] = s
    entries = tuple(
        (x, s)
        for x, s in sorted(acc.items(), key=lambda kv: kv[0].key())
        if s != S.zero
    )
    return Multiset(S, entries)


def multiplicity(phi: Multiset, x: Elem):
    for k, s in phi.entries:
        if k == x:
            return s
    return phi.semiring.zero


# ---------------------------------------------------------------------------
# Monad instances


class MonadInstance(ABC):
    """A strong monad on finite sets, given by its operation table.

    The flags only claim properties; the law suites verify them.
    """

    name: str
    commutative: bool
    additive: bool
    involutive: bool

    @abstractmethod
    def fmap(self, f: Callable[[Elem], Elem], u):
        """Apply T(f) to a value."""

    @abstractmethod
    def unit(self, x: Elem):
        ...

    @abstractmethod
    def mult(self, u):
        """Flatten a value of T(T(X)) whose elements embed inner values."""

    @abstractmethod
    def embed(self, u) -> Elem:
        """Represent a T-value as an element, for nesting."""

    @abstractmethod
    def unembed(self, e: Elem):
        ...

    @abstractmethod
    def check_value(self, u) -> None:
        """Raise if ``u`` is not a value of this monad."""

    def validate_over(self, u, xs: FiniteCarrier) -> None:
        """Raise ElementOutsideCarrier unless ``u`` is a value over ``xs``."""
        self.check_value(u)
        for x in self.value_elements(u):
            if x not in xs:
                raise ElementOutsideCarrier(
                    f"{render_elem(x)} is not in the declared carrier"
                )

    @abstractmethod
    def value_elements(self, u) -> tuple[Elem, ...]:
        """The elements of X that the value mentions."""

    def dst(self, u, v):
        raise NotCommutative(f"{self.name} is not a commutative monad")

    def bc(self, u):
        raise NotAdditive(f"{self.name} is not an additive monad")

    def bc_inv(self, u, v):
        raise NotAdditive(f"{self.name} is not an additive monad")

    def initial_value(self):
        raise NotAdditive(f"{self.name} has no canonical value over the empty set")

    def involution(self, u):
        raise NoInvolution(f"{self.name} has no involution")


class MultisetMonad(MonadInstance):
    """The monad of finitely supported S-valued maps, for a semiring S."""

    def __init__(self, semiring: SemiringDescriptor):
        self.semiring = semiring
        self.name = f"multiset({semiring.name})"
        self.commutative = True
        self.additive = True
        self.involutive = semiring.star is not None

    def check_value(self, u) -> None:
        if not isinstance(u, Multiset) or u.tag != self.semiring.tag:
            raise TagMismatch(f"{u!r} is not a value of {self.name}")

    def value_elements(self, u) -> tuple[Elem, ...]:
        return u.support()

    def fmap(self, f: Callable[[Elem], Elem], u: Multiset) -> Multiset:
        self.check_value(u)
        return ms_from_pairs(self.semiring, ((f(x), s) for x, s in u.entries))

    def unit(self, x: Elem) -> Multiset:
        return ms_unit(x, self.semiring)

    def mult(self, u: Multiset) -> Multiset:
        self.check_value(u)
        return ms_mult(u)

    def embed(self, u: Multiset) -> Elem:
        self.check_value(u)
        return MsVal(u)

    def unembed(self, e: Elem) -> Multiset:
        if not isinstance(e, MsVal):
            raise KeyNotMultiset(f"{render_elem(e)} is not an embedded multiset")
        return e.ms

    def dst(self, u: Multiset, v: Multiset) -> Multiset:
        return ms_dst(u, v)

    def bc(self, u: Multiset) -> tuple[Multiset, Multiset]:
        self.check_value(u)
        left, right = [], []
        for x, s in u.entries:
            if isinstance(x, Inl):
                left.append((x.value, s))
            elif isinstance(x, Inr):
                right.append((x.value, s))
            else:
                raise ElementOutsideCarrier(
                    f"{render_elem(x)} is not an element of a sum carrier"
                )
        S = self.semiring
        return ms_from_pairs(S, left), ms_from_pairs(S, right)

    def bc_inv(self, u: Multiset, v: Multiset) -> Multiset:
        self.check_value(u)
        self.check_value(v)
        pairs = [(Inl(x), s) for x, s in u.entries]
        pairs += [(Inr(y), s) for y, s in v.entries]
        return ms_from_pairs(self.semiring, pairs)

    def initial_value(self) -> Multiset:
        return Multiset(self.semiring, ())

    def involution(self, u: Multiset) -> Multiset:
        self.check_value(u)
        return ms_involution(u)


class ActionMonad(MonadInstance):
    """The monad sending X to M x X, for a monoid M; the monoid element is
    a scalar multiplying on the left."""

    def __init__(self, monoid: MonoidDescriptor):
        self.monoid = monoid
        self.name = f"action({monoid.name})"
        self.commutative = monoid.commutative
        self.additive = False
        self.involutive = False

    def check_value(self, u) -> None:
        if not isinstance(u, ActVal):
            raise MonoidMismatch(f"{u!r} is not a value of {self.name}")
        self.monoid.check_member(u.m)

    def value_elements(self, u: ActVal) -> tuple[Elem, ...]:
        return (u.elem,)

    def fmap(self, f: Callable[[Elem], Elem], u: ActVal) -> ActVal:
        self.check_value(u)
        return ActVal(u.m, f(u.elem))

    def unit(self, x: Elem) -> ActVal:
        return ActVal(self.monoid.unit, x)

    def mult(self, u: ActVal) -> ActVal:
        self.check_value(u)
        inner = u.elem
        if not isinstance(inner, ActVal):
            raise MonoidMismatch(
                f"{render_elem(inner)} is not a nested {self.name} value"
            )
        return ActVal(self.monoid.op(u.m, inner.m), inner.elem)

    def embed(self, u: ActVal) -> Elem:
        self.check_value(u)
        return u

    def unembed(self, e: Elem) -> ActVal:
        self.check_value(e)
        return e

    def dst(self, u: ActVal, v: ActVal):
        if not self.commutative:
            raise NotCommutative(f"{self.name} is not a commutative monad")
        self.check_value(u)
        self.check_value(v)
        return ActVal(self.monoid.op(u.m, v.m), Pair(u.elem, v.elem))


# ---------------------------------------------------------------------------
# Named multiset operations


def ms_unit(x: Elem, S: SemiringDescriptor) -> Multiset:
    """The singleton multiset with multiplicity one at x."""
    return ms_from_pairs(S, [(x, S.one)])


def ms_fmap(f: CarrierMap, phi: Multiset) -> Multiset:
    """Push a multiset forward along a map of carriers.

    The image multiplicity at y is the semiring sum of the multiplicities
    over the preimage of y, which is why the map must be total on the
    support.
    """
    for x in phi.support():
        if x not in f.dom:
            raise ElementOutsideCarrier(
                f"support element {render_elem(x)} is outside the map's domain"
            )
    return ms_from_pairs(phi.semiring, ((f(x), s) for x, s in phi.entries))


def ms_mult(outer: Multiset) -> Multiset:
    """Flatten a multiset of multisets: multiplicities distribute inward."""
    S = outer.semiring
    pairs: list[tuple[Elem, object]] = []
    for k, s in outer.entries:
        if not isinstance(k, MsVal):
            raise KeyNotMultiset(f"key {render_elem(k)} is not an embedded multiset")
        inner = k.ms
        if inner.tag != outer.tag:
            raise TagMismatch(
                f"inner multiset over {inner.tag} inside an outer one over {outer.tag}"
            )
        pairs.extend((x, S.mul(s, t)) for x, t in inner.entries)
    return ms_from_pairs(S, pairs)


def ms_dst(phi: Multiset, psi: Multiset) -> Multiset:
    """Direct double strength: multiplicity at (x, y) is the product."""
    if phi.tag != psi.tag:
        raise TagMismatch(f"cannot pair values over {phi.tag} and {psi.tag}")
    S = phi.semiring
    return ms_from_pairs(
        S,
        (
            (Pair(x, y), S.mul(s, t))
            for x, s in phi.entries
            for y, t in psi.entries
        ),
    )


def ms_involution(phi: Multiset) -> Multiset:
    """Star every multiplicity."""
    S = phi.semiring
    if S.star is None:
        raise NoInvolution(f"semiring {S.name} has no star")
    return ms_from_pairs(S, ((x, S.star(s)) for x, s in phi.entries))


def ms_map_scalars(
    f: Callable, phi: Multiset, target: SemiringDescriptor
) -> Multiset:
    """The monad map induced by a semiring homomorphism f: apply f to every
    multiplicity (zero images get pruned)."""
    return ms_from_pairs(target, ((x, f(s)) for x, s in phi.entries))


# ---------------------------------------------------------------------------
# Generic constructions over any MonadInstance


def generic_strength(T: MonadInstance, u, y: Elem):
    """st(u, y): pair every element of u with y, by functoriality."""
    return T.fmap(lambda x: Pair(x, y), u)


def _swap_pair(e: Elem) -> Elem:
    if not isinstance(e, Pair):
        raise ElementOutsideCarrier(f"{render_elem(e)} is not a pair")
    return Pair(e.right, e.left)


def swapped_strength(T: MonadInstance, x: Elem, v):
    """st'(x, v): the strength on the other side, literally the composite
    of the product swap, st, and T of the swap (never a separate table)."""
    return T.fmap(_swap_pair, generic_strength(T, v, x))


def bicartesian(T: MonadInstance, direction: str, arg):
    """bc (direction ``fwd``) or its inverse (``inv``) for an additive monad."""
    if not T.additive:
        raise NotAdditive(f"{T.name} is not additive")
    if direction == "fwd":
        return T.bc(arg)
    if direction == "inv":
        u, v = arg
        return T.bc_inv(u, v)
    raise ValueError(f"direction must be 'fwd' or 'inv', got {direction!r}")


def _codiagonal(e: Elem) -> Elem:
    if isinstance(e, (Inl, Inr)):
        return e.value
    raise ElementOutsideCarrier(f"{render_elem(e)} is not an element of a sum carrier")


def _never(e: Elem) -> Elem:
    raise ElementOutsideCarrier("the empty carrier has no elements")


def tx_add(T: MonadInstance, u, v):
    """Value addition for an additive monad: merge along the inverse of bc,
    then apply T of the codiagonal."""
    if not T.additive:
        raise NotAdditive(f"{T.name} is not additive")
    if isinstance(u, Multiset) and isinstance(v, Multiset) and u.tag != v.tag:
        raise CarrierMismatch(f"cannot add values over {u.tag} and {v.tag}")
    T.check_value(u)
    T.check_value(v)
    return T.fmap(_codiagonal, T.bc_inv(u, v))


def tx_zero(T: MonadInstance, xs: FiniteCarrier | None = None):
    """The zero value over any carrier: the image of the unique value over
    the empty set under T of the empty map."""
    if not T.additive:
        raise NotAdditive(f"{T.name} is not additive")
    return T.fmap(_never, T.initial_value())


def _second(e: Elem) -> Elem:
    if not isinstance(e, Pair):
        raise ElementOutsideCarrier(f"{render_elem(e)} is not a pair")
    return e.right


def _check_over_point(T: MonadInstance, s) -> None:
    for x in T.value_elements(s):
        if x != STAR:
            raise ElementOutsideCarrier(
                f"{render_elem(x)} is not the one-point carrier's element"
            )


def scalar_action(T: MonadInstance, s, u):
    """The module action of T(1) on T(X): pair with the scalar by double
    strength, then project the point away."""
    if not T.commutative:
        raise NotCommutative(f"{T.name} is not commutative")
    T.check_value(s)
    _check_over_point(T, s)
    return T.fmap(_second, T.dst(s, u))


def eval_at_one(T: MonadInstance):
    """The semiring (or, for non-additive T, the monoid) of T-values over
    the one-point set.

    Multiplication is the generic composite mult . T(snd) . st and addition
    is the generic T(codiagonal) . bc_inv; neither is special-cased to the
    instance, so comparing this descriptor against the base semiring is a
    real check of the construction.
    """

    def e_mul(a, b):
        paired = generic_strength(T, a, T.embed(b))
        collapsed = T.fmap(_second, paired)
        return T.mult(collapsed)

    one = T.unit(STAR)
    if not T.additive:
        return MonoidDescriptor(
            name=f"eval1({T.name})",
            op=e_mul,
            unit=one,
            commutative=T.commutative,
        )
    return SemiringDescriptor(
        name=f"eval1({T.name})",
        add=lambda a, b: tx_add(T, a, b),
        zero=tx_zero(T),
        mul=e_mul,
        one=one,
        star=(lambda a: T.involution(a)) if T.involutive else None,
        tag=None,
    )


def action_unit_mult(M: MonoidDescriptor, op: str, *args):
    """Unit and multiplication of the action monad, on raw values."""
    if op == "unit":
        (x,) = args
        return ActVal(M.unit, x)
    if op == "mult":
        s, inner = args
        M.check_member(s)
        if not isinstance(inner, ActVal):
            raise MonoidMismatch(f"{inner!r} is not an action value")
        M.check_member(inner.m)
        return ActVal(M.op(s, inner.m), inner.elem)
    raise ValueError(f"op must be 'unit' or 'mult', got {op!r}")


# ---------------------------------------------------------------------------
# The two double-strength composites


def dst_strength_first(T: MonadInstance, u, v):
    """The composite mult . T(st') . st applied to (u, v)."""
    outer = generic_strength(T, u, T.embed(v))
    lifted = T.fmap(
        lambda p: T.embed(swapped_strength(T, p.left, T.unembed(p.right))), outer
    )
    return T.mult(lifted)


def dst_swapped_first(T: MonadInstance, u, v):
    """The composite mult . T(st) . st' applied to (u, v)."""
    outer = swapped_strength(T, T.embed(u), v)
    lifted = T.fmap(
        lambda p: T.embed(generic_strength(T, T.unembed(p.left), p.right)), outer
    )
    return T.mult(lifted)


@dataclass(frozen=True)
class CommutativityReport:
    equal: bool
    left: object
    right: object

    def render(self) -> str:
        if self.equal:
            return "equal"
        return f"left={self.left} right={self.right}"


def commutativity_witness(T: MonadInstance, u, v) -> CommutativityReport:
    """Evaluate both double-strength composites on (u, v) and compare."""
    left = dst_strength_first(T, u, v)
    right = dst_swapped_first(T, u, v)
    return CommutativityReport(left == right, left, right)


# ---------------------------------------------------------------------------
# Rendering


def render_elem(e: Elem) -> str:
    if isinstance(e, Atom):
        return str(e.name)
    if isinstance(e, Star):
        return "star"
    if isinstance(e, Pair):
        return f"({render_elem(e.left)},{render_elem(e.right)})"
    if isinstance(e, Inl):
        return f"inl {render_elem(e.value)}"
    if isinstance(e, Inr):
        return f"inr {render_elem(e.value)}"
    if isinstance(e, MsVal):
        return render_multiset(e.ms)
    if isinstance(e, ActVal):
        return f"({e.m},{render_elem(e.elem)})"
    return repr(e)


def render_multiset(phi: Multiset) -> str:
    if not phi.entries:
        return "{}"
    body = ", ".join(f"{render_elem(x)}: {s}" for x, s in phi.entries)
    return "{" + body + "}"
