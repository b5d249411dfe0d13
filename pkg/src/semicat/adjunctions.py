"""Transposes of the three hom-set bijections and the law-suite runner.

Each bijection trades an algebraic map for a structure-preserving map of
monads or theories:

* ``mon-e``: monoid maps M -> eval_at_one(T) against monad maps from the
  action monad of M to T.
* ``srng-e``: semiring maps S -> eval_at_one(T) against monad maps from
  the multiset monad of S to T.
* ``mat-h``: semiring maps S -> homset_semiring(R) against functors of
  matrix theories Mat(S) -> Mat(R).

Witnesses carry sample sets; a transpose first verifies that its input
preserves structure on those samples, then builds the other side of the
bijection and verifies that too. Nothing is ever assumed lawful.

:func:`run_suite` drives the eight named law suites and aggregates each
law's verdict into a deterministic, sorted report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .algebra import (
    GAUSSIAN,
    MONOIDS,
    NAT,
    MonoidDescriptor,
    SEMIRINGS,
    Scalar,
    SemiringDescriptor,
    canonical_from_nat,
    monoid_by_name,
    multiplicative_monoid,
    semiring_by_name,
    word,
)
from .errors import (
    NoInvolution,
    NotAMonoidMap,
    NotASemiringMap,
    NotAdditive,
    SemicatError,
    UnknownSemiring,
    UnknownSuite,
)
from .freetheory import (
    FreeTerm,
    law_unit_functor,
    term_normalize,
    tl_involution,
    tl_mult,
    tl_unit,
    tl_relation_check,
)
from .kleisli import (
    KleisliMap,
    kl_compose,
    kl_coproj,
    kl_cotuple,
    kl_dagger,
    kl_id,
    kl_proj,
    kl_tensor,
    kl_tuple,
    kl_zero,
    kleisli_homset_semiring,
    theta,
    xi,
)
from .matcat import (
    Aleph0Map,
    MatTheory,
    Matrix,
    aleph0_compose,
    aleph0_embed,
    homset_semiring,
    mat_add,
    mat_compose,
    mat_coproj1,
    mat_coproj2,
    mat_cotuple,
    mat_dagger,
    mat_identity,
    mat_proj1,
    mat_proj2,
    mat_tensor,
    mat_tuple,
)
from .monadcore import (
    ActionMonad,
    ActVal,
    Atom,
    Elem,
    Inl,
    Inr,
    MonadInstance,
    Multiset,
    MultisetMonad,
    Pair,
    STAR,
    carrier,
    carrier_map,
    dst_strength_first,
    dst_swapped_first,
    eval_at_one,
    generic_strength,
    ms_from_pairs,
    ms_involution,
    ms_map_scalars,
    ms_mult,
    ms_unit,
    render_elem,
    scalar_action,
    tx_add,
    tx_zero,
)
from .sampling import (
    random_carrier,
    random_carrier_fn,
    random_elem,
    random_free_term,
    random_kleisli,
    random_matrix,
    random_multiset,
    random_nested,
    random_aleph0,
    random_scalar,
    random_tvalue,
    scalar_pool,
)

__all__ = [
    "ADJUNCTION_NAMES",
    "HomWitness",
    "transpose_mon",
    "transpose_srng",
    "transpose_math",
    "SuiteConfig",
    "SuiteReport",
    "SUITE_NAMES",
    "run_suite",
    "run_roundtrip",
]


@dataclass(frozen=True, eq=False)
class HomWitness:
    """One side of a bijective correspondence, with the inputs on which
    its laws were (or will be) checked.

    kind is one of MonoidMap, SemiringMap, MonadMapSample,
    TheoryFunctorSample; apply is the underlying function; samples are
    the probe inputs.
    """

    kind: str
    source: object
    target: object
    apply: Callable
    samples: tuple


def _eval_mul_one(T: MonadInstance):
    E = eval_at_one(T)
    if isinstance(E, MonoidDescriptor):
        return E.op, E.unit
    return E.mul, E.one


def _expect_kind(w: HomWitness, kind: str) -> None:
    if w.kind != kind:
        raise ValueError(f"expected a {kind} witness, got {w.kind}")


# ---------------------------------------------------------------------------
# The monoid triangle


def _check_monoid_map(M: MonoidDescriptor, mul, one, f, samples) -> None:
    if f(M.unit) != one:
        raise NotAMonoidMap(f"unit of {M.name} is not sent to the unit")
    for a in samples:
        for b in samples:
            if f(M.op(a, b)) != mul(f(a), f(b)):
                raise NotAMonoidMap(
                    f"product not preserved at {_show(a)}, {_show(b)}"
                )


def _check_action_monad_map(A: ActionMonad, T: MonadInstance, sigma, samples) -> None:
    xs = carrier([Atom("a"), Atom("b")])
    swap = carrier_map(xs, xs, {Atom("a"): Atom("b"), Atom("b"): Atom("a")})
    for x in xs:
        if sigma(A.unit(x)) != T.unit(x):
            raise NotAMonoidMap(f"unit law fails at {render_elem(x)}")
    for v in samples:
        if T.fmap(swap, sigma(v)) != sigma(A.fmap(swap, v)):
            raise NotAMonoidMap(f"naturality fails at {_show(v)}")
    monoid_elems = sorted({v.m for v in samples}, key=lambda m: m.sort_key())
    for m1 in monoid_elems:
        for m2 in monoid_elems:
            vv = ActVal(m1, ActVal(m2, Atom("a")))
            lhs = sigma(A.mult(vv))
            rhs = T.mult(T.fmap(lambda e: T.embed(sigma(e)), sigma(vv)))
            if lhs != rhs:
                raise NotAMonoidMap(
                    f"multiplication square fails at {_show(m1)}, {_show(m2)}"
                )


def transpose_mon(direction: str, w: HomWitness) -> HomWitness:
    """The bijection between monoid maps into eval_at_one(T) and monad
    maps out of the action monad."""
    if direction == "up":
        _expect_kind(w, "MonoidMap")
        M, T, f = w.source, w.target, w.apply
        mul, one = _eval_mul_one(T)
        _check_monoid_map(M, mul, one, f, w.samples)

        def sigma(v: ActVal):
            return T.fmap(lambda p: p.right, generic_strength(T, f(v.m), v.elem))

        A = ActionMonad(M)
        samples = tuple(
            ActVal(m, x) for m in w.samples for x in (Atom("a"), Atom("b"))
        )
        _check_action_monad_map(A, T, sigma, samples)
        return HomWitness("MonadMapSample", A, T, sigma, samples)
    if direction == "down":
        _expect_kind(w, "MonadMapSample")
        A, T, sigma = w.source, w.target, w.apply

        def f(m):
            return sigma(ActVal(m, STAR))

        seen = []
        for v in w.samples:
            if v.m not in seen:
                seen.append(v.m)
        mul, one = _eval_mul_one(T)
        _check_monoid_map(A.monoid, mul, one, f, tuple(seen))
        return HomWitness("MonoidMap", A.monoid, T, f, tuple(seen))
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


# ---------------------------------------------------------------------------
# The semiring triangle


def _check_semiring_map(S: SemiringDescriptor, E, f, samples) -> None:
    if f(S.zero) != E.zero:
        raise NotASemiringMap(f"zero of {S.name} is not sent to zero")
    if f(S.one) != E.one:
        raise NotASemiringMap(f"one of {S.name} is not sent to one")
    for a in samples:
        for b in samples:
            if f(S.add(a, b)) != E.add(f(a), f(b)):
                raise NotASemiringMap(f"sum not preserved at {_show(a)}, {_show(b)}")
            if f(S.mul(a, b)) != E.mul(f(a), f(b)):
                raise NotASemiringMap(
                    f"product not preserved at {_show(a)}, {_show(b)}"
                )
    if S.star is not None and E.star is not None:
        for a in samples:
            if f(S.star(a)) != E.star(f(a)):
                raise NotASemiringMap(f"star not preserved at {_show(a)}")


def _srng_sample_multisets(S: SemiringDescriptor, scalars) -> tuple:
    a, b = Atom("a"), Atom("b")
    out = [ms_from_pairs(S, [])]
    out += [ms_from_pairs(S, [(a, s)]) for s in scalars]
    out += [
        ms_from_pairs(S, [(a, s), (b, t)])
        for s, t in zip(scalars, tuple(scalars[1:]) + tuple(scalars[:1]))
    ]
    return tuple(out)


def _check_multiset_monad_map(
    MS: MultisetMonad, T: MonadInstance, sigma, samples
) -> None:
    xs = carrier([Atom("a"), Atom("b")])
    swap = carrier_map(xs, xs, {Atom("a"): Atom("b"), Atom("b"): Atom("a")})
    for x in xs:
        if sigma(MS.unit(x)) != T.unit(x):
            raise NotASemiringMap(f"unit law fails at {render_elem(x)}")
    for phi in samples:
        if T.fmap(swap, sigma(phi)) != sigma(MS.fmap(swap, phi)):
            raise NotASemiringMap(f"naturality fails at {_show(phi)}")
        if generic_strength(T, sigma(phi), STAR) != sigma(
            generic_strength(MS, phi, STAR)
        ):
            raise NotASemiringMap(f"strength square fails at {_show(phi)}")
        if MS.involutive and T.involutive:
            if sigma(MS.involution(phi)) != T.involution(sigma(phi)):
                raise NotASemiringMap(f"involution square fails at {_show(phi)}")
    for p1 in samples[:4]:
        for p2 in samples[:4]:
            nested = ms_from_pairs(
                MS.semiring,
                [(MS.embed(p1), MS.semiring.one), (MS.embed(p2), MS.semiring.one)],
            )
            lhs = sigma(MS.mult(nested))
            rhs = T.mult(T.fmap(lambda e: T.embed(sigma(MS.unembed(e))), sigma(nested)))
            if lhs != rhs:
                raise NotASemiringMap(
                    f"multiplication square fails at {_show(nested)}"
                )


def transpose_srng(direction: str, w: HomWitness) -> HomWitness:
    """The bijection between semiring maps into eval_at_one(T) and monad
    maps out of the multiset monad."""
    if direction == "up":
        _expect_kind(w, "SemiringMap")
        S, T, f = w.source, w.target, w.apply
        if not T.additive:
            raise NotAdditive(
                f"{T.name} has no zero map, so it cannot receive semiring maps"
            )
        _check_semiring_map(S, eval_at_one(T), f, w.samples)

        def sigma(phi: Multiset):
            acc = tx_zero(T)
            for x, s in phi.entries:
                acc = tx_add(T, acc, scalar_action(T, f(s), T.unit(x)))
            return acc

        MS = MultisetMonad(S)
        samples = _srng_sample_multisets(S, w.samples)
        _check_multiset_monad_map(MS, T, sigma, samples)
        return HomWitness("MonadMapSample", MS, T, sigma, samples)
    if direction == "down":
        _expect_kind(w, "MonadMapSample")
        MS, T, sigma = w.source, w.target, w.apply
        S = MS.semiring

        def f(s: Scalar):
            return sigma(ms_from_pairs(S, [(STAR, s)]))

        pool = scalar_pool(S)
        _check_semiring_map(S, eval_at_one(T), f, pool)
        return HomWitness("SemiringMap", S, T, f, pool)
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


# ---------------------------------------------------------------------------
# The matrix-theory triangle


def _mat_homset_ops(R: SemiringDescriptor):
    H = homset_semiring(R)
    return H


def _cycle_matrix(S: SemiringDescriptor, pool, rows: int, cols: int, salt: int) -> Matrix:
    n = len(pool)
    return Matrix(
        S,
        rows,
        cols,
        tuple(pool[(salt + k) % n] for k in range(rows * cols)),
    )


def _check_theory_functor(
    S: SemiringDescriptor, R: SemiringDescriptor, F, samples
) -> None:
    for n in range(4):
        if F(mat_identity(S, n)) != mat_identity(R, n):
            raise NotASemiringMap(f"identity on {n} is not preserved")
    pool = scalar_pool(S)
    a = _cycle_matrix(S, pool, 2, 3, 1)
    b = _cycle_matrix(S, pool, 3, 2, 2)
    c = _cycle_matrix(S, pool, 2, 2, 3)
    if F(mat_compose(a, b)) != mat_compose(F(a), F(b)):
        raise NotASemiringMap("composition is not preserved")
    if F(mat_compose(b, c)) != mat_compose(F(b), F(c)):
        raise NotASemiringMap("composition is not preserved")
    for n in range(3):
        for m in range(3):
            if F(mat_coproj1(S, n, m)) != mat_coproj1(R, n, m):
                raise NotASemiringMap("coprojections are not preserved")
            if F(mat_proj2(S, n, m)) != mat_proj2(R, n, m):
                raise NotASemiringMap("projections are not preserved")
    if F(mat_tensor(a, c)) != mat_tensor(F(a), F(c)):
        raise NotASemiringMap("the tensor is not preserved")
    if S.star is not None and R.star is not None:
        if F(mat_dagger(a)) != mat_dagger(F(a)):
            raise NotASemiringMap("the dagger is not preserved")
    for h in samples:
        F(h)


def transpose_math(direction: str, w: HomWitness) -> HomWitness:
    """The bijection between semiring maps into the endomap semiring of a
    matrix theory and functors of matrix theories."""
    if direction == "up":
        _expect_kind(w, "SemiringMap")
        S, L, f = w.source, w.target, w.apply
        R = L.semiring
        _check_semiring_map(S, _mat_homset_ops(R), f, w.samples)

        def apply_mat(h: Matrix) -> Matrix:
            rows = []
            for i in range(h.rows):
                row = Matrix(R, 1, 0, ())
                for j in range(h.cols):
                    row = mat_tuple(row, f(h.entry(i, j)))
                rows.append(row)
            out = Matrix(R, 0, h.cols, ())
            for row in rows:
                out = mat_cotuple(out, row)
            return out

        pool = scalar_pool(S)
        samples = (
            _cycle_matrix(S, pool, 1, 1, 0),
            _cycle_matrix(S, pool, 2, 2, 1),
            _cycle_matrix(S, pool, 2, 3, 2),
            _cycle_matrix(S, pool, 3, 2, 3),
            Matrix(S, 0, 2, ()),
            Matrix(S, 2, 0, ()),
        )
        _check_theory_functor(S, R, apply_mat, samples)
        return HomWitness("TheoryFunctorSample", MatTheory(S), L, apply_mat, samples)
    if direction == "down":
        _expect_kind(w, "TheoryFunctorSample")
        LS, LR, F = w.source, w.target, w.apply
        S = LS.semiring

        def f(s: Scalar) -> Matrix:
            return F(Matrix(S, 1, 1, (s,)))

        pool = scalar_pool(S)
        _check_semiring_map(S, _mat_homset_ops(LR.semiring), f, pool)
        return HomWitness("SemiringMap", S, LR, f, pool)
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


# ---------------------------------------------------------------------------
# Suite plumbing


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    semiring: str | None = None
    monoid: str | None = None
    seed: int = 0
    cases: int = 100


@dataclass(frozen=True)
class SuiteReport:
    """Law verdicts, one (subject, law, ok, detail) entry per law."""

    suite: str
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e[2] for e in self.entries)

    def render(self) -> str:
        lines = []
        for subject, law, ok, detail in self.entries:
            lines.append(f"{'PASS' if ok else 'FAIL'} {subject} :: {law}")
            if detail:
                lines.extend(f"  {piece}" for piece in detail.splitlines())
        return "\n".join(lines)


def _show(v) -> str:
    if isinstance(v, Elem):
        return render_elem(v)
    return str(v)


def _sampled_law(entries, subject, law, rng, cases, sample, holds) -> None:
    """Run one law over freshly sampled inputs; record the first failure
    with the inputs as the counterexample."""
    for _ in range(cases):
        args = sample(rng)
        try:
            ok = holds(*args)
        except SemicatError as exc:
            entries.append((subject, law, False, f"error: {exc}"))
            return
        if not ok:
            detail = "\n".join(_show(a) for a in args)
            entries.append((subject, law, False, detail))
            return
    entries.append((subject, law, True, None))


def _direct_law(entries, subject, law, check) -> None:
    """Run one self-contained check returning (ok, detail)."""
    try:
        ok, detail = check()
    except SemicatError as exc:
        ok, detail = False, f"error: {exc}"
    entries.append((subject, law, ok, detail))


def _monoid_named(name: str) -> MonoidDescriptor:
    try:
        return monoid_by_name(name)
    except UnknownSemiring:
        raise UnknownSuite(f"no suite instance for monoid {name!r}") from None


def _selected_semirings(config: SuiteConfig) -> list[SemiringDescriptor]:
    if config.semiring is not None:
        return [semiring_by_name(config.semiring)]
    return list(SEMIRINGS.values())


def _selected_monads(config: SuiteConfig) -> list[MonadInstance]:
    insts: list[MonadInstance] = []
    if config.semiring is not None:
        insts.append(MultisetMonad(semiring_by_name(config.semiring)))
    if config.monoid is not None:
        insts.append(ActionMonad(_monoid_named(config.monoid)))
    if not insts:
        insts = [MultisetMonad(S) for S in SEMIRINGS.values()]
        insts.append(ActionMonad(MONOIDS["nat-mul"]))
        insts.append(ActionMonad(MONOIDS["free-words"]))
    return insts


# ---------------------------------------------------------------------------
# Suite: monad-laws


def _suite_monad_laws(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    for T in _selected_monads(config):
        subject = T.name

        def s_u(rng, T=T):
            return (random_tvalue(rng, T, random_carrier(rng)),)

        def s_fgu(rng, T=T):
            X = random_carrier(rng, 5, "abcde")
            Y = random_carrier(rng, 5, "pqrst")
            Z = random_carrier(rng, 5, "uvwxy")
            return (
                random_carrier_fn(rng, X, Y),
                random_carrier_fn(rng, Y, Z),
                random_tvalue(rng, T, X),
            )

        def s_fx(rng, T=T):
            X = random_carrier(rng, 5, "abcde")
            Y = random_carrier(rng, 5, "pqrst")
            return (random_carrier_fn(rng, X, Y), random_elem(rng, X))

        def s_fu2(rng, T=T):
            X = random_carrier(rng, 5, "abcde")
            Y = random_carrier(rng, 5, "pqrst")
            return (random_carrier_fn(rng, X, Y), random_nested(rng, T, X, 2))

        def s_u2y(rng, T=T):
            X = random_carrier(rng, 5, "abcde")
            Y = random_carrier(rng, 5, "pqrst")
            return (random_nested(rng, T, X, 2), random_elem(rng, Y))

        def s_u3(rng, T=T):
            return (random_nested(rng, T, random_carrier(rng, 4), 3),)

        def s_xy(rng, T=T):
            X = random_carrier(rng, 5, "abcde")
            Y = random_carrier(rng, 5, "pqrst")
            return (random_elem(rng, X), random_elem(rng, Y))

        _sampled_law(
            entries, subject, "fmap-identity", rng, cases, s_u,
            lambda u, T=T: T.fmap(lambda e: e, u) == u,
        )
        _sampled_law(
            entries, subject, "fmap-compose", rng, cases, s_fgu,
            lambda f, g, u, T=T: T.fmap(lambda e: g(f(e)), u)
            == T.fmap(g, T.fmap(f, u)),
        )
        _sampled_law(
            entries, subject, "unit-natural", rng, cases, s_fx,
            lambda f, x, T=T: T.fmap(f, T.unit(x)) == T.unit(f(x)),
        )
        _sampled_law(
            entries, subject, "mult-natural", rng, cases, s_fu2,
            lambda f, u2, T=T: T.fmap(f, T.mult(u2))
            == T.mult(T.fmap(lambda e: T.embed(T.fmap(f, T.unembed(e))), u2)),
        )
        _sampled_law(
            entries, subject, "mult-unit-left", rng, cases, s_u,
            lambda u, T=T: T.mult(T.unit(T.embed(u))) == u,
        )
        _sampled_law(
            entries, subject, "mult-unit-right", rng, cases, s_u,
            lambda u, T=T: T.mult(T.fmap(lambda e: T.embed(T.unit(e)), u)) == u,
        )
        _sampled_law(
            entries, subject, "mult-assoc", rng, cases, s_u3,
            lambda u3, T=T: T.mult(T.mult(u3))
            == T.mult(T.fmap(lambda e: T.embed(T.mult(T.unembed(e))), u3)),
        )
        _sampled_law(
            entries, subject, "strength-unit", rng, cases, s_xy,
            lambda x, y, T=T: generic_strength(T, T.unit(x), y)
            == T.unit(Pair(x, y)),
        )
        _sampled_law(
            entries, subject, "strength-mult", rng, cases, s_u2y,
            lambda u2, y, T=T: generic_strength(T, T.mult(u2), y)
            == T.mult(
                T.fmap(
                    lambda p: T.embed(generic_strength(T, T.unembed(p.left), p.right)),
                    generic_strength(T, u2, y),
                )
            ),
        )
        _sampled_law(
            entries, subject, "strength-point", rng, cases, s_u,
            lambda u, T=T: T.fmap(lambda p: p.left, generic_strength(T, u, STAR))
            == u,
        )
    return entries


# ---------------------------------------------------------------------------
# Suite: additivity (bicartesian structure plus the module laws)


def _suite_additivity(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    point = carrier([STAR])
    for S in _selected_semirings(config):
        T = MultisetMonad(S)
        subject = T.name

        def s_w(rng, S=S, T=T):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            u = random_multiset(rng, S, X)
            v = random_multiset(rng, S, Y)
            return (T.bc_inv(u, v),)

        def s_uv(rng, S=S):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            return (random_multiset(rng, S, X), random_multiset(rng, S, Y))

        _sampled_law(
            entries, subject, "bc-roundtrip-fwd", rng, cases, s_w,
            lambda w, T=T: T.bc_inv(*T.bc(w)) == w,
        )
        _sampled_law(
            entries, subject, "bc-roundtrip-inv", rng, cases, s_uv,
            lambda u, v, T=T: T.bc(T.bc_inv(u, v)) == (u, v),
        )
        _direct_law(
            entries, subject, "initial-singleton",
            lambda S=S, T=T: (
                ms_from_pairs(S, []) == T.initial_value()
                and tx_zero(T) == T.initial_value(),
                None,
            ),
        )

        def s_fgw(rng, S=S, T=T):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            X2 = random_carrier(rng, 4, "efgh")
            Y2 = random_carrier(rng, 4, "tuvw")
            return (
                random_carrier_fn(rng, X, X2),
                random_carrier_fn(rng, Y, Y2),
                T.bc_inv(random_multiset(rng, S, X), random_multiset(rng, S, Y)),
            )

        def bc_natural(f, g, w, T=T):
            u, v = T.bc(w)
            mapped = T.fmap(
                lambda e: Inl(f(e.value)) if isinstance(e, Inl) else Inr(g(e.value)),
                w,
            )
            return T.bc(mapped) == (T.fmap(f, u), T.fmap(g, v))

        _sampled_law(entries, subject, "bc-natural", rng, cases, s_fgw, bc_natural)

        TN = MultisetMonad(NAT)

        def s_wnat(rng, TN=TN):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            return (
                TN.bc_inv(
                    random_multiset(rng, NAT, X), random_multiset(rng, NAT, Y)
                ),
            )

        def bc_monad_map(w, S=S, T=T, TN=TN):
            hom = lambda sc: canonical_from_nat(S, sc.payload)
            sig = lambda phi: ms_map_scalars(hom, phi, S)
            un, vn = TN.bc(w)
            return T.bc(sig(w)) == (sig(un), sig(vn))

        _sampled_law(entries, subject, "bc-monad-map", rng, cases, s_wnat, bc_monad_map)

        def s_uonly(rng, S=S):
            return (random_multiset(rng, S, random_carrier(rng, 4, "abcd")),)

        def bc_rho(u, T=T):
            w = T.fmap(Inl, u)
            return T.bc(w) == (u, T.initial_value())

        _sampled_law(entries, subject, "bc-rho", rng, cases, s_uonly, bc_rho)

        def bc_swap(w, T=T):
            u, v = T.bc(w)
            flipped = T.fmap(
                lambda e: Inr(e.value) if isinstance(e, Inl) else Inl(e.value), w
            )
            return T.bc(flipped) == (v, u)

        _sampled_law(entries, subject, "bc-swap", rng, cases, s_w, bc_swap)

        def s_w3(rng, S=S, T=T):
            X = random_carrier(rng, 3, "abc")
            Y = random_carrier(rng, 3, "pqr")
            Z = random_carrier(rng, 3, "uvw")
            inner = T.bc_inv(random_multiset(rng, S, X), random_multiset(rng, S, Y))
            return (T.bc_inv(inner, random_multiset(rng, S, Z)),)

        def bc_assoc(w3, T=T):
            ab, c = T.bc(w3)
            a1, a2 = T.bc(ab)
            lhs = (a1, (a2, c))

            def alpha(e):
                if isinstance(e, Inl):
                    inner = e.value
                    if isinstance(inner, Inl):
                        return Inl(inner.value)
                    return Inr(Inl(inner.value))
                return Inr(Inr(e.value))

            b1, bc_rest = T.bc(T.fmap(alpha, w3))
            b21, b22 = T.bc(bc_rest)
            return lhs == (b1, (b21, b22))

        _sampled_law(entries, subject, "bc-assoc", rng, cases, s_w3, bc_assoc)

        def s_xy(rng):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            return (random_elem(rng, X), random_elem(rng, Y))

        def bc_eta(x, y, T=T):
            return T.bc(T.unit(Inl(x))) == (T.unit(x), tx_zero(T)) and T.bc(
                T.unit(Inr(y))
            ) == (tx_zero(T), T.unit(y))

        _sampled_law(entries, subject, "bc-eta", rng, cases, s_xy, bc_eta)

        def s_w2(rng, S=S, T=T):
            X = random_carrier(rng, 3, "abc")
            Y = random_carrier(rng, 3, "pqr")
            both = carrier([Inl(x) for x in X] + [Inr(y) for y in Y])
            return (random_nested(rng, T, both, 2),)

        def bc_mu_left(w2, T=T):
            lhs = T.bc(T.mult(w2))
            mapped = T.fmap(
                lambda e: Pair(
                    T.embed(T.bc(T.unembed(e))[0]), T.embed(T.bc(T.unembed(e))[1])
                ),
                w2,
            )
            left = T.mult(T.fmap(lambda p: p.left, mapped))
            right = T.mult(T.fmap(lambda p: p.right, mapped))
            return lhs == (left, right)

        _sampled_law(entries, subject, "bc-mu-left", rng, cases, s_w2, bc_mu_left)

        def s_wt(rng, S=S, T=T):
            X = random_carrier(rng, 3, "abc")
            Y = random_carrier(rng, 3, "pqr")
            pairs = []
            for _ in range(rng.randint(0, 3)):
                if rng.random() < 0.5:
                    key = Inl(T.embed(random_multiset(rng, S, X)))
                else:
                    key = Inr(T.embed(random_multiset(rng, S, Y)))
                pairs.append((key, random_scalar(rng, S)))
            return (ms_from_pairs(S, pairs),)

        def bc_mu_right(wt, T=T):
            def tag_inside(e):
                if isinstance(e, Inl):
                    return T.embed(T.fmap(Inl, T.unembed(e.value)))
                return T.embed(T.fmap(Inr, T.unembed(e.value)))

            lhs = T.bc(T.mult(T.fmap(tag_inside, wt)))
            l, r = T.bc(wt)
            return lhs == (T.mult(l), T.mult(r))

        _sampled_law(entries, subject, "bc-mu-right", rng, cases, s_wt, bc_mu_right)

        def s_wz(rng, S=S, T=T):
            X = random_carrier(rng, 3, "abc")
            Y = random_carrier(rng, 3, "pqr")
            Z = random_carrier(rng, 3, "uvw")
            w = T.bc_inv(random_multiset(rng, S, X), random_multiset(rng, S, Y))
            return (w, random_elem(rng, Z))

        def bc_strength(w, z, T=T):
            u, v = T.bc(w)
            lhs = (generic_strength(T, u, z), generic_strength(T, v, z))

            def distrib(p):
                if isinstance(p.left, Inl):
                    return Inl(Pair(p.left.value, p.right))
                return Inr(Pair(p.left.value, p.right))

            rhs = T.bc(T.fmap(distrib, generic_strength(T, w, z)))
            return lhs == rhs

        _sampled_law(entries, subject, "bc-strength", rng, cases, s_wz, bc_strength)

        E = eval_at_one(T)

        def s_stu(rng, S=S, T=T, point=point):
            X = random_carrier(rng, 4, "abcd")
            return (
                random_multiset(rng, S, point, 1),
                random_multiset(rng, S, point, 1),
                random_multiset(rng, S, X),
                random_multiset(rng, S, X),
            )

        _sampled_law(
            entries, subject, "module-unit", rng, cases, s_stu,
            lambda s, t, u, v, T=T: scalar_action(T, T.unit(STAR), u) == u,
        )
        _sampled_law(
            entries, subject, "module-assoc", rng, cases, s_stu,
            lambda s, t, u, v, T=T, E=E: scalar_action(T, E.mul(s, t), u)
            == scalar_action(T, s, scalar_action(T, t, u)),
        )
        _sampled_law(
            entries, subject, "module-dist-value", rng, cases, s_stu,
            lambda s, t, u, v, T=T: scalar_action(T, s, tx_add(T, u, v))
            == tx_add(T, scalar_action(T, s, u), scalar_action(T, s, v)),
        )
        _sampled_law(
            entries, subject, "module-dist-scalar", rng, cases, s_stu,
            lambda s, t, u, v, T=T: scalar_action(T, tx_add(T, s, t), u)
            == tx_add(T, scalar_action(T, s, u), scalar_action(T, t, u)),
        )
        _sampled_law(
            entries, subject, "module-zero-scalar", rng, cases, s_stu,
            lambda s, t, u, v, T=T: scalar_action(T, tx_zero(T), u) == tx_zero(T),
        )
        _sampled_law(
            entries, subject, "module-zero-value", rng, cases, s_stu,
            lambda s, t, u, v, T=T: scalar_action(T, s, tx_zero(T)) == tx_zero(T),
        )
    return entries


# ---------------------------------------------------------------------------
# Suite: commutativity


def _suite_commutativity(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    for T in _selected_monads(config):
        subject = T.name

        def s_uv(rng, T=T):
            X = random_carrier(rng, 4, "abcd")
            Y = random_carrier(rng, 4, "pqrs")
            return (random_tvalue(rng, T, X), random_tvalue(rng, T, Y))

        if T.commutative:
            _sampled_law(
                entries, subject, "dst-composites-agree", rng, cases, s_uv,
                lambda u, v, T=T: dst_strength_first(T, u, v)
                == dst_swapped_first(T, u, v),
            )
            if isinstance(T, MultisetMonad):
                _sampled_law(
                    entries, subject, "dst-direct-agrees", rng, cases, s_uv,
                    lambda u, v, T=T: T.dst(u, v) == dst_strength_first(T, u, v),
                )
        else:
            def expected_fail(T=T, cases=cases, rng=rng):
                candidates = [
                    (
                        ActVal(word("ab"), Atom("x")),
                        ActVal(word("cd"), Atom("y")),
                    )
                ]
                X = carrier([Atom("x")])
                Y = carrier([Atom("y")])
                for _ in range(cases):
                    candidates.append(
                        (random_tvalue(rng, T, X), random_tvalue(rng, T, Y))
                    )
                for u, v in candidates:
                    left = dst_strength_first(T, u, v)
                    right = dst_swapped_first(T, u, v)
                    if left != right:
                        return True, (
                            f"u = {_show(u)}\nv = {_show(v)}\n"
                            f"strength-first  = {_show(left)}\n"
                            f"swapped-first   = {_show(right)}"
                        )
                return False, "no disagreeing pair found"

            _direct_law(entries, subject, "noncommutativity-witnessed", expected_fail)
    return entries


# ---------------------------------------------------------------------------
# Suite: matcat-laws


def _naive_compose(g: Matrix, h: Matrix) -> Matrix:
    S = g.semiring
    out = [[None] * h.cols for _ in range(g.rows)]
    for i in range(g.rows):
        for k in range(h.cols):
            acc = S.zero
            for j in range(g.cols):
                acc = S.add(acc, S.mul(g.entries[i * g.cols + j], h.entries[j * h.cols + k]))
            out[i][k] = acc
    return Matrix(S, g.rows, h.cols, tuple(e for row in out for e in row))


def _coord_swap(n: int, m: int, S: SemiringDescriptor) -> Matrix:
    table = [0] * (n * m)
    for a in range(n):
        for b in range(m):
            table[a * m + b] = b * n + a
    return aleph0_embed(Aleph0Map(n * m, m * n, tuple(table)), S)


def _suite_matcat(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    for S in _selected_semirings(config):
        subject = f"mat({S.name})"

        def dims(rng, lo=0, hi=4):
            return rng.randint(lo, hi)

        def s_triple(rng, S=S):
            n, m, p, q = (dims(rng) for _ in range(4))
            return (
                random_matrix(rng, S, n, m),
                random_matrix(rng, S, m, p),
                random_matrix(rng, S, p, q),
            )

        def s_pair(rng, S=S):
            n, m, p = (dims(rng) for _ in range(3))
            return (random_matrix(rng, S, n, m), random_matrix(rng, S, m, p))

        def s_single(rng, S=S):
            return (random_matrix(rng, S, dims(rng), dims(rng)),)

        _sampled_law(
            entries, subject, "compose-assoc", rng, cases, s_triple,
            lambda a, b, c: mat_compose(mat_compose(a, b), c)
            == mat_compose(a, mat_compose(b, c)),
        )
        _sampled_law(
            entries, subject, "identity-neutral", rng, cases, s_single,
            lambda a, S=S: mat_compose(mat_identity(S, a.rows), a) == a
            and mat_compose(a, mat_identity(S, a.cols)) == a,
        )
        _sampled_law(
            entries, subject, "compose-oracle", rng, cases, s_pair,
            lambda a, b: mat_compose(a, b) == _naive_compose(a, b),
        )

        def biproduct_delta(S=S):
            for n in range(4):
                for m in range(4):
                    z_nm = Matrix(S, n, m, tuple(S.zero for _ in range(n * m)))
                    z_mn = Matrix(S, m, n, tuple(S.zero for _ in range(m * n)))
                    if mat_compose(mat_coproj1(S, n, m), mat_proj1(S, n, m)) != mat_identity(S, n):
                        return False, f"p1 . k1 at ({n},{m})"
                    if mat_compose(mat_coproj2(S, n, m), mat_proj2(S, n, m)) != mat_identity(S, m):
                        return False, f"p2 . k2 at ({n},{m})"
                    if mat_compose(mat_coproj1(S, n, m), mat_proj2(S, n, m)) != z_nm:
                        return False, f"p2 . k1 at ({n},{m})"
                    if mat_compose(mat_coproj2(S, n, m), mat_proj1(S, n, m)) != z_mn:
                        return False, f"p1 . k2 at ({n},{m})"
            return True, None

        _direct_law(entries, subject, "biproduct-delta", biproduct_delta)

        def s_into_sum(rng, S=S):
            k, n, m = dims(rng, 1, 3), dims(rng), dims(rng)
            return (random_matrix(rng, S, k, n + m), n, m)

        _sampled_law(
            entries, subject, "tuple-recovery", rng, cases, s_into_sum,
            lambda f, n, m, S=S: mat_tuple(
                mat_compose(f, mat_proj1(S, n, m)), mat_compose(f, mat_proj2(S, n, m))
            )
            == f,
        )

        def s_from_sum(rng, S=S):
            k, n, m = dims(rng, 1, 3), dims(rng), dims(rng)
            return (random_matrix(rng, S, n + m, k), n, m)

        _sampled_law(
            entries, subject, "cotuple-recovery", rng, cases, s_from_sum,
            lambda f, n, m, S=S: mat_cotuple(
                mat_compose(mat_coproj1(S, n, m), f),
                mat_compose(mat_coproj2(S, n, m), f),
            )
            == f,
        )

        def s_tensor4(rng, S=S):
            m, p, p2 = dims(rng, 0, 3), dims(rng, 0, 3), dims(rng, 0, 3)
            n, q, q2 = dims(rng, 0, 3), dims(rng, 0, 3), dims(rng, 0, 3)
            return (
                random_matrix(rng, S, m, p),
                random_matrix(rng, S, n, q),
                random_matrix(rng, S, p, p2),
                random_matrix(rng, S, q, q2),
            )

        _sampled_law(
            entries, subject, "tensor-functorial", rng, cases, s_tensor4,
            lambda g, h, g2, h2: mat_compose(mat_tensor(g, h), mat_tensor(g2, h2))
            == mat_tensor(mat_compose(g, g2), mat_compose(h, h2)),
        )

        def tensor_identity(S=S):
            for m in range(4):
                for n in range(4):
                    if mat_tensor(mat_identity(S, m), mat_identity(S, n)) != mat_identity(S, m * n):
                        return False, f"id tensor id at ({m},{n})"
            return True, None

        _direct_law(entries, subject, "tensor-identity", tensor_identity)

        _sampled_law(
            entries, subject, "tensor-unit", rng, cases, s_single,
            lambda g, S=S: mat_tensor(g, mat_identity(S, 1)) == g
            and mat_tensor(mat_identity(S, 1), g) == g,
        )

        def s_tensor2(rng, S=S):
            m, p = dims(rng, 0, 3), dims(rng, 0, 3)
            n, q = dims(rng, 0, 3), dims(rng, 0, 3)
            return (random_matrix(rng, S, m, p), random_matrix(rng, S, n, q))

        def tensor_symmetry(g, h, S=S):
            left = mat_compose(mat_tensor(g, h), _coord_swap(g.cols, h.cols, S))
            right = mat_compose(_coord_swap(g.rows, h.rows, S), mat_tensor(h, g))
            return left == right

        _sampled_law(
            entries, subject, "tensor-symmetry", rng, cases, s_tensor2, tensor_symmetry
        )

        def tensor_distributes(S=S):
            for n in range(3):
                for m in range(3):
                    for k in range(3):
                        idn = mat_identity(S, n)
                        d = mat_cotuple(
                            mat_tensor(idn, mat_coproj1(S, m, k)),
                            mat_tensor(idn, mat_coproj2(S, m, k)),
                        )
                        e = mat_tuple(
                            mat_tensor(idn, mat_proj1(S, m, k)),
                            mat_tensor(idn, mat_proj2(S, m, k)),
                        )
                        if mat_compose(d, e) != mat_identity(S, n * m + n * k):
                            return False, f"d . e at ({n},{m},{k})"
                        if mat_compose(e, d) != mat_identity(S, n * (m + k)):
                            return False, f"e . d at ({n},{m},{k})"
            return True, None

        _direct_law(entries, subject, "tensor-distributes", tensor_distributes)

        def s_fns(rng):
            n = dims(rng, 0, 4)
            m = dims(rng, 1, 4)
            p = dims(rng, 1, 4)
            return (random_aleph0(rng, n, m), random_aleph0(rng, m, p))

        _sampled_law(
            entries, subject, "embed-functorial", rng, cases, s_fns,
            lambda f, g, S=S: aleph0_embed(aleph0_compose(f, g), S)
            == mat_compose(aleph0_embed(f, S), aleph0_embed(g, S)),
        )

        def homset_agrees(S=S):
            H = homset_semiring(S)
            box = lambda s: Matrix(S, 1, 1, (s,))
            if H.zero != box(S.zero) or H.one != box(S.one):
                return False, "constants disagree"
            for a in scalar_pool(S):
                for b in scalar_pool(S):
                    if H.add(box(a), box(b)) != box(S.add(a, b)):
                        return False, f"sum at {a}, {b}"
                    if H.mul(box(a), box(b)) != box(S.mul(a, b)):
                        return False, f"product at {a}, {b}"
                if S.star is not None and H.star(box(a)) != box(S.star(a)):
                    return False, f"star at {a}"
            return True, None

        _direct_law(entries, subject, "homset-agrees", homset_agrees)

        def s_parallel(rng, S=S):
            n, m = dims(rng), dims(rng)
            return (random_matrix(rng, S, n, m), random_matrix(rng, S, n, m))

        def add_entrywise(f, g, S=S):
            expected = Matrix(
                S,
                f.rows,
                f.cols,
                tuple(S.add(a, b) for a, b in zip(f.entries, g.entries)),
            )
            return mat_add(f, g) == expected

        _sampled_law(
            entries, subject, "add-entrywise", rng, cases, s_parallel, add_entrywise
        )
    return entries


# ---------------------------------------------------------------------------
# Suite: dagger


def _suite_dagger(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    if config.semiring is not None:
        semirings = [semiring_by_name(config.semiring)]
    else:
        semirings = [GAUSSIAN]
    for S in semirings:
        subject = f"mat({S.name})"

        def s_one(rng, S=S):
            return (random_matrix(rng, S, 3, 3),)

        def s_two(rng, S=S):
            return (random_matrix(rng, S, 3, 3), random_matrix(rng, S, 3, 3))

        _sampled_law(
            entries, subject, "dagger-involutive", rng, cases, s_one,
            lambda f: mat_dagger(mat_dagger(f)) == f,
        )
        _sampled_law(
            entries, subject, "dagger-contravariant", rng, cases, s_two,
            lambda g, h: mat_dagger(mat_compose(g, h))
            == mat_compose(mat_dagger(h), mat_dagger(g)),
        )
        _sampled_law(
            entries, subject, "dagger-tensor", rng, cases, s_two,
            lambda f, g: mat_dagger(mat_tensor(f, g))
            == mat_tensor(mat_dagger(f), mat_dagger(g)),
        )

        def dagger_structural(S=S):
            for n in range(4):
                for m in range(4):
                    if mat_coproj1(S, n, m) != mat_dagger(mat_proj1(S, n, m)):
                        return False, f"k1 vs p1-dagger at ({n},{m})"
                    if mat_coproj2(S, n, m) != mat_dagger(mat_proj2(S, n, m)):
                        return False, f"k2 vs p2-dagger at ({n},{m})"
            return True, None

        _direct_law(entries, subject, "dagger-structural", dagger_structural)
    return entries


# ---------------------------------------------------------------------------
# Suite: freetheory


def _suite_freetheory(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    for S in _selected_semirings(config):
        T = MultisetMonad(S)
        subject = f"terms({S.name})"

        def s_rel(rng, S=S):
            i = rng.randint(0, 4)
            m = rng.randint(1, 4)
            X = random_carrier(rng, 4, "abcd")
            f = random_aleph0(rng, i, m)
            g = random_matrix(rng, S, 1, i)
            v = tuple(random_elem(rng, X) for _ in range(m))
            return (f, g, v)

        _sampled_law(
            entries, subject, "relation-sound", rng, cases, s_rel,
            lambda f, g, v: tl_relation_check(f, g, v),
        )

        def s_x(rng):
            return (random_elem(rng, random_carrier(rng, 4, "abcd")),)

        _sampled_law(
            entries, subject, "unit-agrees", rng, cases, s_x,
            lambda x, S=S: term_normalize(tl_unit(x, S)) == ms_unit(x, S),
        )

        def s_outer(rng, S=S):
            X = random_carrier(rng, 4, "abcd")
            k = rng.randint(0, 3)
            inners = tuple(random_free_term(rng, S, X, 3) for _ in range(k))
            return (FreeTerm(random_matrix(rng, S, 1, k), inners),)

        def mult_agrees(outer, S=S, T=T):
            lhs = term_normalize(tl_mult(outer))
            layered = ms_from_pairs(
                S,
                [
                    (T.embed(term_normalize(t)), c)
                    for t, c in zip(outer.args, outer.coeffs.entries)
                ],
            )
            return lhs == ms_mult(layered)

        _sampled_law(entries, subject, "mult-agrees", rng, cases, s_outer, mult_agrees)

        if S.star is not None:
            def s_term(rng, S=S):
                return (random_free_term(rng, S, random_carrier(rng, 4, "abcd")),)

            _sampled_law(
                entries, subject, "involution-agrees", rng, cases, s_term,
                lambda t: term_normalize(tl_involution(t))
                == ms_involution(term_normalize(t)),
            )

        def unit_functor_id(S=S, T=T):
            for n in range(4):
                if law_unit_functor(mat_identity(S, n)) != kl_id(T, n):
                    return False, f"identity at {n}"
            return True, None

        _direct_law(entries, subject, "unit-functor-id", unit_functor_id)

        def s_mats(rng, S=S):
            n = rng.randint(0, 3)
            m = rng.randint(0, 3)
            p = rng.randint(0, 3)
            return (random_matrix(rng, S, n, m), random_matrix(rng, S, m, p))

        _sampled_law(
            entries, subject, "unit-functor-compose", rng, cases, s_mats,
            lambda a, b: law_unit_functor(mat_compose(a, b))
            == kl_compose(law_unit_functor(a), law_unit_functor(b)),
        )

        def unit_functor_coproj(S=S, T=T):
            for n in range(3):
                for m in range(3):
                    if law_unit_functor(mat_coproj1(S, n, m)) != kl_coproj(T, 1, n, m):
                        return False, f"coproj1 at ({n},{m})"
                    if law_unit_functor(mat_coproj2(S, n, m)) != kl_coproj(T, 2, n, m):
                        return False, f"coproj2 at ({n},{m})"
            return True, None

        _direct_law(entries, subject, "unit-functor-coproj", unit_functor_coproj)
    return entries


# ---------------------------------------------------------------------------
# Suite: kleisli-iso


def _suite_kleisli_iso(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    cases = config.cases
    point = carrier([STAR])
    for S in _selected_semirings(config):
        T = MultisetMonad(S)
        E = eval_at_one(T)
        subject = f"kl({T.name})"

        def s_kl3(rng, T=T):
            n, m, p, q = (rng.randint(0, 3) for _ in range(4))
            return (
                random_kleisli(rng, T, n, m),
                random_kleisli(rng, T, m, p),
                random_kleisli(rng, T, p, q),
            )

        def s_kl1(rng, T=T):
            n, m = rng.randint(0, 3), rng.randint(0, 3)
            return (random_kleisli(rng, T, n, m),)

        def s_kl2(rng, T=T):
            n, m, p = (rng.randint(0, 3) for _ in range(3))
            return (random_kleisli(rng, T, n, m), random_kleisli(rng, T, m, p))

        _sampled_law(
            entries, subject, "kl-assoc", rng, cases, s_kl3,
            lambda f, g, h: kl_compose(kl_compose(f, g), h)
            == kl_compose(f, kl_compose(g, h)),
        )
        _sampled_law(
            entries, subject, "kl-identity", rng, cases, s_kl1,
            lambda f, T=T: kl_compose(kl_id(T, f.dom), f) == f
            and kl_compose(f, kl_id(T, f.cod)) == f,
        )
        _sampled_law(
            entries, subject, "xi-theta-id", rng, cases, s_kl1,
            lambda k, T=T: xi(T, theta(k)) == k,
        )

        def s_emat(rng, S=S, E=E, point=point):
            n, m = rng.randint(0, 3), rng.randint(0, 3)
            return (
                Matrix(
                    E, n, m,
                    tuple(random_multiset(rng, S, point, 1) for _ in range(n * m)),
                ),
            )

        _sampled_law(
            entries, subject, "theta-xi-id", rng, cases, s_emat,
            lambda h, T=T: theta(xi(T, h)) == h,
        )
        _sampled_law(
            entries, subject, "theta-compose", rng, cases, s_kl2,
            lambda f, g: theta(kl_compose(f, g)) == mat_compose(theta(f), theta(g)),
        )

        def theta_structural(T=T, E=E):
            for n in range(3):
                for m in range(3):
                    if theta(kl_coproj(T, 1, n, m)) != mat_coproj1(E, n, m):
                        return False, f"coproj1 at ({n},{m})"
                    if theta(kl_coproj(T, 2, n, m)) != mat_coproj2(E, n, m):
                        return False, f"coproj2 at ({n},{m})"
                    if theta(kl_proj(T, 1, n, m)) != mat_proj1(E, n, m):
                        return False, f"proj1 at ({n},{m})"
                    if theta(kl_proj(T, 2, n, m)) != mat_proj2(E, n, m):
                        return False, f"proj2 at ({n},{m})"
                    zero_mat = theta(kl_zero(T, n, m))
                    if zero_mat != Matrix(E, n, m, tuple(E.zero for _ in range(n * m))):
                        return False, f"zero at ({n},{m})"
            return True, None

        _direct_law(entries, subject, "theta-structural", theta_structural)

        def s_parallel(rng, T=T):
            n, m, p = (rng.randint(0, 3) for _ in range(3))
            return (random_kleisli(rng, T, n, m), random_kleisli(rng, T, n, p))

        _sampled_law(
            entries, subject, "theta-tuple", rng, cases, s_parallel,
            lambda f, g: theta(kl_tuple(f, g)) == mat_tuple(theta(f), theta(g)),
        )

        def s_coparallel(rng, T=T):
            n, m, p = (rng.randint(0, 3) for _ in range(3))
            return (random_kleisli(rng, T, n, p), random_kleisli(rng, T, m, p))

        _sampled_law(
            entries, subject, "theta-cotuple", rng, cases, s_coparallel,
            lambda f, g: theta(kl_cotuple(f, g)) == mat_cotuple(theta(f), theta(g)),
        )

        def s_small2(rng, T=T):
            dims = [rng.randint(0, 2) for _ in range(4)]
            return (
                random_kleisli(rng, T, dims[0], dims[1]),
                random_kleisli(rng, T, dims[2], dims[3]),
            )

        _sampled_law(
            entries, subject, "theta-tensor", rng, cases, s_small2,
            lambda f, g: theta(kl_tensor(f, g)) == mat_tensor(theta(f), theta(g)),
        )

        if S.star is not None:
            _sampled_law(
                entries, subject, "theta-dagger", rng, cases, s_kl1,
                lambda k: theta(kl_dagger(k)) == mat_dagger(theta(k)),
            )

        def biproduct_eqs(T=T):
            for n in range(3):
                for m in range(3):
                    if kl_compose(kl_coproj(T, 1, n, m), kl_proj(T, 1, n, m)) != kl_id(T, n):
                        return False, f"p1 . k1 at ({n},{m})"
                    if kl_compose(kl_coproj(T, 2, n, m), kl_proj(T, 2, n, m)) != kl_id(T, m):
                        return False, f"p2 . k2 at ({n},{m})"
                    if kl_compose(kl_coproj(T, 1, n, m), kl_proj(T, 2, n, m)) != kl_zero(T, n, m):
                        return False, f"p2 . k1 at ({n},{m})"
                    if kl_compose(kl_coproj(T, 2, n, m), kl_proj(T, 1, n, m)) != kl_zero(T, m, n):
                        return False, f"p1 . k2 at ({n},{m})"
            return True, None

        _direct_law(entries, subject, "biproduct-eqs", biproduct_eqs)

        def homset_agrees(S=S, T=T, E=E, point=point):
            KH = kleisli_homset_semiring(T)

            def as_map(u):
                return KleisliMap(T, 1, 1, (T.fmap(lambda e: Atom(0), u),))

            pool = [ms_from_pairs(S, [(STAR, s)]) for s in scalar_pool(S)]
            pool.append(tx_zero(T))
            for a in pool:
                for b in pool:
                    if KH.add(as_map(a), as_map(b)) != as_map(tx_add(T, a, b)):
                        return False, f"sum at {_show(a)}, {_show(b)}"
                    if KH.mul(as_map(a), as_map(b)) != as_map(E.mul(a, b)):
                        return False, f"product at {_show(a)}, {_show(b)}"
                if S.star is not None and KH.star(as_map(a)) != as_map(E.star(a)):
                    return False, f"star at {_show(a)}"
            if KH.zero != as_map(tx_zero(T)) or KH.one != as_map(T.unit(STAR)):
                return False, "constants disagree"
            return True, None

        _direct_law(entries, subject, "homset-agrees", homset_agrees)
    return entries


# ---------------------------------------------------------------------------
# Suite: adjunction-roundtrips


def _mon_witnesses(S: SemiringDescriptor, T: MultisetMonad) -> list[HomWitness]:
    out = []
    M = multiplicative_monoid(S)
    iso = lambda m: ms_from_pairs(S, [(STAR, m)])
    out.append(HomWitness("MonoidMap", M, T, iso, scalar_pool(S)))
    nat_mul = MONOIDS["nat-mul"]
    via_nat = lambda m: ms_from_pairs(S, [(STAR, canonical_from_nat(S, m.payload))])
    out.append(HomWitness("MonoidMap", nat_mul, T, via_nat, scalar_pool(NAT)))
    return out


def _srng_witnesses(S: SemiringDescriptor, T: MultisetMonad) -> list[HomWitness]:
    out = []
    iso = lambda s: ms_from_pairs(S, [(STAR, s)])
    out.append(HomWitness("SemiringMap", S, T, iso, scalar_pool(S)))
    via_nat = lambda s: ms_from_pairs(S, [(STAR, canonical_from_nat(S, s.payload))])
    out.append(HomWitness("SemiringMap", NAT, T, via_nat, scalar_pool(NAT)))
    if S.star is not None:
        starred = lambda s: ms_from_pairs(S, [(STAR, S.star(s))])
        out.append(HomWitness("SemiringMap", S, T, starred, scalar_pool(S)))
    return out


def _math_witnesses(S: SemiringDescriptor) -> list[HomWitness]:
    L = MatTheory(S)
    out = []
    box = lambda s: Matrix(S, 1, 1, (s,))
    out.append(HomWitness("SemiringMap", S, L, box, scalar_pool(S)))
    via_nat = lambda s: Matrix(S, 1, 1, (canonical_from_nat(S, s.payload),))
    out.append(HomWitness("SemiringMap", NAT, L, via_nat, scalar_pool(NAT)))
    return out


def _mon_roundtrip_check(S: SemiringDescriptor):
    T = MultisetMonad(S)
    for idx, w in enumerate(_mon_witnesses(S, T)):
        up = transpose_mon("up", w)
        down = transpose_mon("down", up)
        for m in w.samples:
            if down.apply(m) != w.apply(m):
                return False, f"witness {idx}: down . up differs at {_show(m)}"
        up2 = transpose_mon("up", down)
        for v in up.samples:
            if up2.apply(v) != up.apply(v):
                return False, f"witness {idx}: up . down differs at {_show(v)}"
    return True, None


def _srng_roundtrip_check(S: SemiringDescriptor):
    T = MultisetMonad(S)
    for idx, w in enumerate(_srng_witnesses(S, T)):
        up = transpose_srng("up", w)
        down = transpose_srng("down", up)
        for s in w.samples:
            if down.apply(s) != w.apply(s):
                return False, f"witness {idx}: down . up differs at {_show(s)}"
        up2 = transpose_srng("up", down)
        for phi in up.samples:
            if up2.apply(phi) != up.apply(phi):
                return False, f"witness {idx}: up . down differs at {_show(phi)}"
    return True, None


def _srng_natural_check(S: SemiringDescriptor):
    T = MultisetMonad(S)
    hom = lambda sc: canonical_from_nat(S, sc.payload)
    iso = lambda s: ms_from_pairs(S, [(STAR, s)])
    w_s = HomWitness("SemiringMap", S, T, iso, scalar_pool(S))
    w_n = HomWitness("SemiringMap", NAT, T, lambda s: iso(hom(s)), scalar_pool(NAT))
    up_s = transpose_srng("up", w_s)
    up_n = transpose_srng("up", w_n)
    for phi in _srng_sample_multisets(NAT, scalar_pool(NAT)):
        if up_n.apply(phi) != up_s.apply(ms_map_scalars(hom, phi, S)):
            return False, f"naturality square differs at {_show(phi)}"
    return True, None


def _srng_involutive_check(S: SemiringDescriptor):
    T = MultisetMonad(S)
    iso = lambda s: ms_from_pairs(S, [(STAR, s)])
    w = HomWitness("SemiringMap", S, T, iso, scalar_pool(S))
    up = transpose_srng("up", w)
    for phi in up.samples:
        if up.apply(ms_involution(phi)) != T.involution(up.apply(phi)):
            return False, f"involution square differs at {_show(phi)}"
    down = transpose_srng("down", up)
    for s in scalar_pool(S):
        if down.apply(S.star(s)) != T.involution(down.apply(s)):
            return False, f"down star square differs at {_show(s)}"
    return True, None


def _math_roundtrip_check(S: SemiringDescriptor):
    for idx, w in enumerate(_math_witnesses(S)):
        up = transpose_math("up", w)
        down = transpose_math("down", up)
        for s in w.samples:
            if down.apply(s) != w.apply(s):
                return False, f"witness {idx}: down . up differs at {_show(s)}"
        up2 = transpose_math("up", down)
        for h in up.samples:
            if up2.apply(h) != up.apply(h):
                return False, f"witness {idx}: up . down differs at {_show(h)}"
    return True, None


def _math_natural_check(S: SemiringDescriptor):
    hom = lambda sc: canonical_from_nat(S, sc.payload)
    L = MatTheory(S)
    w_n = HomWitness(
        "SemiringMap", NAT, L,
        lambda s: Matrix(S, 1, 1, (hom(s),)), scalar_pool(NAT),
    )
    w_s = HomWitness(
        "SemiringMap", S, L,
        lambda s: Matrix(S, 1, 1, (s,)), scalar_pool(S),
    )
    F_n = transpose_math("up", w_n)
    F_s = transpose_math("up", w_s)
    for h in F_n.samples:
        entrywise = Matrix(S, h.rows, h.cols, tuple(hom(e) for e in h.entries))
        if F_n.apply(h) != F_s.apply(entrywise):
            return False, "naturality square differs"
    return True, None


def _math_involutive_check(S: SemiringDescriptor):
    w = _math_witnesses(S)[0]
    up = transpose_math("up", w)
    for h in up.samples:
        if up.apply(mat_dagger(h)) != mat_dagger(up.apply(h)):
            return False, "dagger square differs"
    return True, None


def _suite_adjunctions(config: SuiteConfig, rng: random.Random) -> list:
    entries: list = []
    for S in _selected_semirings(config):
        subject = f"adjunction({S.name})"
        _direct_law(
            entries, subject, "mon-e-roundtrip", lambda S=S: _mon_roundtrip_check(S)
        )
        _direct_law(
            entries, subject, "srng-e-roundtrip", lambda S=S: _srng_roundtrip_check(S)
        )
        _direct_law(
            entries, subject, "srng-e-natural", lambda S=S: _srng_natural_check(S)
        )
        _direct_law(
            entries, subject, "mat-h-roundtrip", lambda S=S: _math_roundtrip_check(S)
        )
        _direct_law(
            entries, subject, "mat-h-natural", lambda S=S: _math_natural_check(S)
        )
        if S.star is not None:
            _direct_law(
                entries, subject, "srng-e-involutive",
                lambda S=S: _srng_involutive_check(S),
            )
            _direct_law(
                entries, subject, "mat-h-involutive",
                lambda S=S: _math_involutive_check(S),
            )
    return entries


ADJUNCTION_NAMES = ("mon-e", "srng-e", "mat-h")


def run_roundtrip(adjunction: str, semiring_name: str, involutive: bool = False) -> SuiteReport:
    """Round-trip one adjunction's transposes over a named semiring.

    With ``involutive`` set, additionally checks that the transposes
    commute with the star structure; only srng-e and mat-h support this.
    """
    if adjunction not in ADJUNCTION_NAMES:
        raise UnknownSuite(
            f"unknown adjunction {adjunction!r}; known: {', '.join(ADJUNCTION_NAMES)}"
        )
    S = semiring_by_name(semiring_name)
    if involutive:
        if adjunction == "mon-e":
            raise UnknownSuite("mon-e has no involutive refinement")
        if S.star is None:
            raise NoInvolution(f"{S.name} has no star operation")
    entries: list = []
    subject = f"adjunction({S.name})"
    if adjunction == "mon-e":
        _direct_law(entries, subject, "mon-e-roundtrip", lambda: _mon_roundtrip_check(S))
    elif adjunction == "srng-e":
        _direct_law(entries, subject, "srng-e-roundtrip", lambda: _srng_roundtrip_check(S))
        _direct_law(entries, subject, "srng-e-natural", lambda: _srng_natural_check(S))
        if involutive:
            _direct_law(
                entries, subject, "srng-e-involutive", lambda: _srng_involutive_check(S)
            )
    else:
        _direct_law(entries, subject, "mat-h-roundtrip", lambda: _math_roundtrip_check(S))
        _direct_law(entries, subject, "mat-h-natural", lambda: _math_natural_check(S))
        if involutive:
            _direct_law(
                entries, subject, "mat-h-involutive", lambda: _math_involutive_check(S)
            )
    return SuiteReport(
        f"roundtrip({adjunction})",
        tuple(sorted(entries, key=lambda e: (e[0], e[1]))),
    )


_SUITES = {
    "monad-laws": _suite_monad_laws,
    "additivity": _suite_additivity,
    "commutativity": _suite_commutativity,
    "matcat-laws": _suite_matcat,
    "dagger": _suite_dagger,
    "freetheory": _suite_freetheory,
    "kleisli-iso": _suite_kleisli_iso,
    "adjunction-roundtrips": _suite_adjunctions,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run one named suite deterministically from its seed."""
    try:
        build = _SUITES[config.suite]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {config.suite!r}; known: {', '.join(SUITE_NAMES)}"
        ) from None
    rng = random.Random(config.seed)
    entries = build(config, rng)
    return SuiteReport(config.suite, tuple(sorted(entries, key=lambda e: (e[0], e[1]))))
