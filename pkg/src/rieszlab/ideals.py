"""Riesz ideals, quotients and homomorphisms of ``R^n``.

An ideal of ``R^n`` is stored by the set ``S`` of coordinates on which it
vanishes: ``D_S = {x : x_i = 0 for i in S}``. Every Riesz ideal of ``R^n`` has
this form (a standard fact; only the converse direction, that each ``D_S`` is
an ideal, is checked here).

Riesz homomorphisms ``R^n -> R^m`` are stored in the normal form
``x ↦ (c_j · x_σ(j))_j`` with ``c_j > 0``, which is the finite-dimensional
classification of lattice-preserving linear maps. Lattice preservation is
still verified on samples rather than assumed.

The quotient ``R^n / D_S`` is realised as the projection onto the coordinates
in ``S``. Its kernel is ``D_S`` and its positive cone is the image of the
positive cone, which is the order the general construction puts on ``E/D``
through representatives; for support ideals the two agree, but that is
asserted here rather than mechanised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .core import Counterexample, LawReport
from .errors import NotAUnitError, PreconditionError, SpaceMismatchError
from .rational import ONE, ZERO, Rational, random_rational, to_rational
from .spaces import FinDimSpace, Vector, as_vector

MAX_ENUMERATION_DIM = 12


@dataclass(frozen=True)
class SupportIdeal:
    """``D_S = {x in R^n : x_i = 0 for every i in zero_set}``."""

    n: int
    zero_set: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("ambient dimension must be positive")
        zs = frozenset(int(i) for i in self.zero_set)
        if any(not 0 <= i < self.n for i in zs):
            raise PreconditionError(f"zero_set {sorted(zs)} not within range({self.n})")
        object.__setattr__(self, "zero_set", zs)

    @property
    def free(self) -> tuple[int, ...]:
        """Coordinates on which members may be nonzero."""
        return tuple(i for i in range(self.n) if i not in self.zero_set)

    @property
    def is_proper(self) -> bool:
        return bool(self.zero_set)

    @property
    def dimension(self) -> int:
        return self.n - len(self.zero_set)

    def __contains__(self, x) -> bool:
        if len(x) != self.n:
            raise SpaceMismatchError(f"expected {self.n} coordinates, got {len(x)}")
        return all(x[i] == 0 for i in self.zero_set)

    def members(self, rng: random.Random, count: int) -> list[Vector]:
        out = []
        for _ in range(count):
            out.append(tuple(
                ZERO if i in self.zero_set else random_rational(rng) for i in range(self.n)
            ))
        return out

    def __repr__(self) -> str:
        return f"SupportIdeal(n={self.n}, zero_set={sorted(self.zero_set)})"


@dataclass(frozen=True)
class SampleSet:
    """A candidate subset of ``R^n`` known only through a membership test and
    a finite list of members. Used to run the ideal checks on sets that are
    not support ideals (for instance the diagonal of ``R^2``)."""

    n: int
    samples: tuple
    membership: Callable[[Vector], bool]

    def __contains__(self, x) -> bool:
        return self.membership(x)

    def members(self, rng: random.Random, count: int) -> list[Vector]:
        pool = [as_vector(s) for s in self.samples]
        return [pool[i % len(pool)] for i in range(count)] if pool else []


@dataclass(frozen=True)
class FinHom:
    """The map ``R^n -> R^m``, ``x ↦ (coeff_j · x[index_j])_j``."""

    n: int
    assign: tuple  # tuple[tuple[int, Rational], ...]

    def __post_init__(self):
        pairs = tuple((int(i), to_rational(c)) for i, c in self.assign)
        for i, c in pairs:
            if not 0 <= i < self.n:
                raise PreconditionError(f"source index {i} not within range({self.n})")
            if c <= 0:
                raise PreconditionError(f"coefficients must be positive, got {c}")
        object.__setattr__(self, "assign", pairs)

    @classmethod
    def identity(cls, n: int) -> "FinHom":
        return cls(n, tuple((i, ONE) for i in range(n)))

    @property
    def m(self) -> int:
        return len(self.assign)

    def __call__(self, x) -> Vector:
        if len(x) != self.n:
            raise SpaceMismatchError(f"expected {self.n} coordinates, got {len(x)}")
        return tuple(c * x[i] for i, c in self.assign)

    def compose(self, inner: "FinHom") -> "FinHom":
        """``self ∘ inner``."""
        if inner.m != self.n:
            raise SpaceMismatchError(f"cannot compose R^{inner.n}->R^{inner.m} into R^{self.n}")
        return FinHom(inner.n, tuple(
            (inner.assign[i][0], c * inner.assign[i][1]) for i, c in self.assign
        ))

    def is_unit_preserving(self, u, u_target) -> bool:
        return len(u_target) == self.m and self(u) == tuple(u_target)


@dataclass(frozen=True, order=True)
class SpectrumPoint:
    """The functional ``x ↦ coeff · x[index]`` on ``R^n``.

    With ``coeff = 1/u[index]`` it is a unit-preserving Riesz homomorphism
    into ``R``, i.e. a point of the spectrum.
    """

    index: int
    coeff: Rational

    def __post_init__(self):
        object.__setattr__(self, "coeff", to_rational(self.coeff))
        if self.coeff <= 0:
            raise PreconditionError("spectrum coefficients are positive")

    def __call__(self, x) -> Rational:
        return self.coeff * x[self.index]


def perp_ideal(a: Sequence) -> SupportIdeal:
    """``a^⊥``: the elements orthogonal to ``a``, i.e. vanishing on its support."""
    a = as_vector(a)
    return SupportIdeal(len(a), frozenset(i for i, c in enumerate(a) if c != 0))


def _shrink(rng: random.Random, a: Vector, lower: int = -1) -> Vector:
    # coordinatewise factor in [lower, 1] keeps |x| <= |a|
    out = []
    for c in a:
        k = rng.randint(lower * 10, 10)
        out.append(c * k / 10)
    return tuple(out)


def _truncations(a: Vector) -> Iterable[Vector]:
    for keep in range(len(a) - 1, -1, -1):
        yield tuple(c if i < keep else ZERO for i, c in enumerate(a))


def is_riesz_ideal(D, samples: int = 500, seed: int = 0) -> LawReport:
    """Check the solid-subspace characterisation of an ideal on samples.

    Covers: linear closure, solidity (``|x| <= |a|``, ``a in D`` gives
    ``x in D``), closure under positive parts, and order-convexity of the
    positive part (``0 <= x <= a``, ``a in D`` gives ``x in D``). The first
    candidates for each member ``a`` are its truncations, so failures come
    with small witnesses.
    """
    rng = random.Random(f"{seed}:ideal")
    members = D.members(rng, samples)
    space = FinDimSpace(D.n)
    law = "riesz-ideal"
    formula = "linear subspace; |x| <= |a|, a ∈ D ⇒ x ∈ D; a ∈ D ⇒ a⁺ ∈ D; 0 <= x <= a ∈ D ⇒ x ∈ D"

    def fail(condition, inputs, lhs, rhs):
        return LawReport(law, formula, samples, Counterexample(inputs, lhs, rhs), note=condition)

    for k, a in enumerate(members):
        b = members[(k + 1) % len(members)]
        lam = random_rational(rng)
        for candidate in (space.add(a, b), space.scale(lam, a)):
            if candidate not in D:
                return fail("linear closure", (a, b, lam), candidate, "outside D")
        solid = [*_truncations(a), _shrink(rng, a)]
        for x in solid:
            if x not in D:
                return fail("solidity", (x, a), space.abs(x), space.abs(a))
        if space.pos(a) not in D:
            return fail("positive part", (a,), space.pos(a), "outside D")
        top = space.abs(a)
        x = _shrink(rng, top, lower=0)
        if x not in D:
            return fail("order-convexity", (x, top), x, top)
    return LawReport(law, formula, samples)


@dataclass(frozen=True)
class Quotient:
    space: Optional[FinDimSpace]
    unit: Vector
    q: FinHom


def quotient(n: int, u: Sequence, D: SupportIdeal) -> Quotient:
    """``R^n / D`` as the projection onto the coordinates where ``D`` vanishes."""
    u = as_vector(u)
    if D.n != n or len(u) != n:
        raise SpaceMismatchError("ideal, unit and dimension disagree")
    if not FinDimSpace(n).is_unit(u):
        raise NotAUnitError(f"{u!r} is not a unit of R^{n}")
    kept = sorted(D.zero_set)
    if not kept:
        raise PreconditionError("quotient by the whole space is the zero space, which has no unit")
    q = FinHom(n, tuple((i, ONE) for i in kept))
    image_unit = q(u)
    return Quotient(FinDimSpace(len(kept), image_unit), image_unit, q)


def kernel_equals(q: FinHom, D: SupportIdeal) -> bool:
    """Exact check that ``ker q = D``: both are coordinate subspaces, so compare
    the sets of coordinates they annihilate."""
    return frozenset(i for i, _ in q.assign) == D.zero_set


def enumerate_ideals(n: int) -> list[SupportIdeal]:
    """All ``2^n`` ideals of ``R^n``, smallest zero set first."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if n > MAX_ENUMERATION_DIM:
        raise PreconditionError(f"refusing to enumerate 2^{n} ideals (n <= {MAX_ENUMERATION_DIM})")
    return [
        SupportIdeal(n, frozenset(c))
        for k in range(n + 1)
        for c in combinations(range(n), k)
    ]


def maximal_ideals(n: int) -> list[SupportIdeal]:
    """The maximal proper ideals ``{x : x_i = 0}``, one per coordinate.

    Each is the kernel of the coordinate evaluation ``x ↦ x_i``, so each
    quotient is one-dimensional, i.e. a copy of ``R``.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    return [SupportIdeal(n, frozenset({i})) for i in range(n)]


def separating_hom(a: Sequence, u: Sequence):
    """A unit-preserving ``φ: R^n -> R`` with ``φ(a) != 0``.

    Picks the smallest index where ``a`` is nonzero.
    """
    a, u = as_vector(a), as_vector(u)
    if len(a) != len(u):
        raise SpaceMismatchError("element and unit have different lengths")
    if not FinDimSpace(len(u)).is_unit(u):
        raise NotAUnitError(f"{u!r} is not a unit of R^{len(u)}")
    for i, c in enumerate(a):
        if c != 0:
            return SpectrumPoint(i, 1 / u[i])
    raise PreconditionError("no homomorphism separates 0 from 0")


def continuity_bound_holds(h: FinHom, u, u_target, x) -> bool:
    """``‖h(x)‖_{u'} <= ‖h(u)‖_{u'} · ‖x‖_u``."""
    src, dst = FinDimSpace(h.n), FinDimSpace(h.m)
    return dst.unit_norm(h(x), u_target) <= dst.unit_norm(h(u), u_target) * src.unit_norm(x, u)


def random_hom(rng: random.Random, n: int, m: int) -> FinHom:
    return FinHom(n, tuple(
        (rng.randrange(n), to_rational(f"{rng.randint(1, 20)}/{rng.randint(1, 10)}"))
        for _ in range(m)
    ))


__all__ = [
    "FinHom",
    "Quotient",
    "SampleSet",
    "SpectrumPoint",
    "SupportIdeal",
    "continuity_bound_holds",
    "enumerate_ideals",
    "is_riesz_ideal",
    "kernel_equals",
    "maximal_ideals",
    "perp_ideal",
    "quotient",
    "random_hom",
    "separating_hom",
]
