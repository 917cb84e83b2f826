"""Abstract Riesz space, derived order operations, unit norms and a law harness.

Every concrete space (see :mod:`rieszlab.spaces`) supplies the primitive
operations ``add``, ``neg``, ``scale``, ``join``, ``meet`` plus an exact unit
norm. Everything order-theoretic is derived here from the lattice operations,
so order and lattice can never disagree: ``x <= y`` is decided as
``x ∧ y == x``.

Units and infinitesimals follow two different quantifiers: a unit must give
``|x| < n·u`` for some natural ``n``, while an infinitesimal ``ε`` needs
``n·ε <= b`` for every integer ``n``. Both definitions are implemented as
stated, without reconciling the asymmetry.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .errors import NotAUnitError, PreconditionError, SpaceMismatchError
from .rational import ZERO, Rational, random_rational, to_rational

HALF = to_rational("1/2")

Element = Any


@dataclass(frozen=True)
class Infinitesimal:
    """A nonzero ``eps`` with ``n·eps <= bound`` for all integers ``n``.

    ``certificate`` is a closed-form argument; :meth:`spot_check` only
    evaluates finitely many ``n`` and cannot replace it.
    """

    eps: Element
    bound: Element
    certificate: str

    def spot_check(self, space: "RieszSpace", ns: Sequence[int]) -> bool:
        return all(space.leq(space.scale(n, self.eps), self.bound) for n in ns)


class RieszSpace(ABC):
    """A lattice-ordered rational vector space with a distinguished unit."""

    descriptor: str = "abstract"
    archimedean: bool = True

    # primitives -----------------------------------------------------------

    @abstractmethod
    def zero(self) -> Element: ...

    @abstractmethod
    def add(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def neg(self, x: Element) -> Element: ...

    @abstractmethod
    def scale(self, lam: Rational, x: Element) -> Element: ...

    @abstractmethod
    def join(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def meet(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def element(self, obj) -> Element:
        """Validate/coerce ``obj`` into this space's element representation."""

    @abstractmethod
    def is_unit(self, u: Element) -> bool: ...

    @abstractmethod
    def _unit_norm(self, x: Element, u: Element) -> Rational: ...

    @abstractmethod
    def find_infinitesimal(self) -> Optional[Infinitesimal]: ...

    @abstractmethod
    def random_element(self, rng: random.Random) -> Element: ...

    @abstractmethod
    def random_unit(self, rng: random.Random) -> Element: ...

    @property
    @abstractmethod
    def unit(self) -> Element:
        """The distinguished unit."""

    def eq(self, x: Element, y: Element) -> bool:
        return x == y

    # derived operations ---------------------------------------------------

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def leq(self, x: Element, y: Element) -> bool:
        return self.eq(self.meet(x, y), x)

    def abs(self, x: Element) -> Element:
        return self.join(x, self.neg(x))

    def pos(self, x: Element) -> Element:
        return self.join(x, self.zero())

    def neg_part(self, x: Element) -> Element:
        return self.join(self.neg(x), self.zero())

    def is_orthogonal(self, x: Element, y: Element) -> bool:
        return self.eq(self.meet(self.abs(x), self.abs(y)), self.zero())

    def riesz_decompose(self, x: Element, a: Element, b: Element) -> tuple[Element, Element]:
        """Split ``0 <= x <= a + b`` as ``a' + b'`` with ``0 <= a' <= a``, ``0 <= b' <= b``.

        Uses ``a' = x ∧ a`` and ``b' = x - a'``.
        """
        zero = self.zero()
        for name, value in (("x", x), ("a", a), ("b", b)):
            if not self.leq(zero, value):
                raise PreconditionError(f"riesz_decompose requires 0 <= {name}")
        if not self.leq(x, self.add(a, b)):
            raise PreconditionError("riesz_decompose requires x <= a + b")
        a_part = self.meet(x, a)
        return a_part, self.sub(x, a_part)

    def unit_norm(self, x: Element, u: Element) -> Rational:
        """``inf {λ >= 0 : |x| <= λu}``, evaluated exactly."""
        if not self.is_unit(u):
            raise NotAUnitError(f"{u!r} is not a unit of {self.descriptor}")
        return self._unit_norm(x, u)

    def sample(self, rng: random.Random) -> Element:
        """Random element; zero with probability 1/20 so degenerate cases are hit."""
        if rng.randrange(20) == 0:
            return self.zero()
        return self.random_element(rng)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor}>"


# ---------------------------------------------------------------------------
# law harness


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class LawReport:
    law: str
    formula: str
    cases: int
    counterexample: Optional[Counterexample] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class Law:
    """A named identity or inequality.

    ``sample`` draws the inputs, ``sides`` returns ``(holds, lhs, rhs)``.
    """

    name: str
    formula: str
    sample: Callable[[RieszSpace, random.Random], tuple]
    sides: Callable[..., tuple[bool, Any, Any]]
    archimedean_only: bool = False
    tags: tuple[str, ...] = field(default=())


def _eq(space, lhs, rhs):
    return space.eq(lhs, rhs), lhs, rhs


def _le(space, lhs, rhs):
    return space.leq(lhs, rhs), lhs, rhs


def _two(space, rng):
    return space.sample(rng), space.sample(rng)


def _three(space, rng):
    return space.sample(rng), space.sample(rng), space.sample(rng)


def _one(space, rng):
    return (space.sample(rng),)


def _elem_scalar(space, rng):
    lam = ZERO if rng.randrange(10) == 0 else random_rational(rng)
    return space.sample(rng), lam


def _pair_nonneg_scalar(space, rng):
    lam = ZERO if rng.randrange(10) == 0 else abs(random_rational(rng))
    return space.sample(rng), space.sample(rng), lam


def _order_pair(space, rng):
    x, y = space.sample(rng), space.sample(rng)
    if rng.randrange(2):
        y = space.join(x, y)
    return x, y


def _decomposition_triple(space, rng):
    a = space.abs(space.sample(rng))
    b = space.abs(space.sample(rng))
    x = space.meet(space.abs(space.sample(rng)), space.add(a, b))
    if rng.randrange(10) == 0:
        x = a
    return x, a, b


def _elem_unit(space, rng):
    return space.sample(rng), space.random_unit(rng)


def _two_elem_unit(space, rng):
    return space.sample(rng), space.sample(rng), space.random_unit(rng)


def _elem_scalar_unit(space, rng):
    return space.sample(rng), random_rational(rng), space.random_unit(rng)


def _elem_two_units(space, rng):
    return space.sample(rng), space.random_unit(rng), space.random_unit(rng)


def _half(space, x):
    return space.scale(HALF, x)


def _decomposition_sides(s, x, a, b):
    a1, b1 = s.riesz_decompose(x, a, b)
    zero = s.zero()
    ok = (
        s.eq(s.add(a1, b1), x)
        and s.leq(zero, a1) and s.leq(a1, a)
        and s.leq(zero, b1) and s.leq(b1, b)
    )
    return ok, (a1, b1), x


def _order_recovery_sides(s, x, y):
    by_join = s.eq(s.join(x, y), y)
    by_meet = s.eq(s.meet(x, y), x)
    return by_join == by_meet == s.leq(x, y), by_join, by_meet


def _norm_equivalence_sides(s, x, e, u):
    nx_u, nx_e = s.unit_norm(x, u), s.unit_norm(x, e)
    lower = nx_u / s.unit_norm(e, u)
    upper = s.unit_norm(u, e) * nx_u
    return lower <= nx_e <= upper, (lower, upper), nx_e


LAWS: tuple[Law, ...] = (
    # elementary lattice identities
    Law("scale-join", "λ(x ∨ y) = (λx) ∨ (λy) for λ >= 0", _pair_nonneg_scalar,
        lambda s, x, y, lam: _eq(s, s.scale(lam, s.join(x, y)), s.join(s.scale(lam, x), s.scale(lam, y))),
        tags=("basics",)),
    Law("neg-join", "-(x ∨ y) = (-x) ∧ (-y)", _two,
        lambda s, x, y: _eq(s, s.neg(s.join(x, y)), s.meet(s.neg(x), s.neg(y))),
        tags=("basics",)),
    Law("translate-join", "(x + a) ∨ (y + a) = (x ∨ y) + a", _three,
        lambda s, x, y, a: _eq(s, s.join(s.add(x, a), s.add(y, a)), s.add(s.join(x, y), a)),
        tags=("basics",)),
    Law("join-plus-meet", "x ∨ y + x ∧ y = x + y", _two,
        lambda s, x, y: _eq(s, s.add(s.join(x, y), s.meet(x, y)), s.add(x, y)),
        tags=("basics",)),
    Law("distributive", "(x ∧ y) ∨ a = (x ∨ a) ∧ (y ∨ a)", _three,
        lambda s, x, y, a: _eq(s, s.join(s.meet(x, y), a), s.meet(s.join(x, a), s.join(y, a))),
        tags=("basics",)),
    # absolute value and positive/negative parts
    Law("parts-difference", "x = x⁺ - x⁻", _one,
        lambda s, x: _eq(s, x, s.sub(s.pos(x), s.neg_part(x))), tags=("abs",)),
    Law("abs-sum-of-parts", "|x| = x⁺ + x⁻", _one,
        lambda s, x: _eq(s, s.abs(x), s.add(s.pos(x), s.neg_part(x))), tags=("abs",)),
    Law("abs-nonnegative", "|x| >= 0", _one,
        lambda s, x: _le(s, s.zero(), s.abs(x)), tags=("abs",)),
    Law("abs-join-of-parts", "|x| = x⁺ ∨ x⁻", _one,
        lambda s, x: _eq(s, s.abs(x), s.join(s.pos(x), s.neg_part(x))), tags=("abs",)),
    Law("parts-orthogonal", "x⁺ ⊥ x⁻", _one,
        lambda s, x: (s.is_orthogonal(s.pos(x), s.neg_part(x)),
                      s.meet(s.abs(s.pos(x)), s.abs(s.neg_part(x))), s.zero()),
        tags=("abs",)),
    Law("abs-homogeneous", "|λx| = |λ||x|", _elem_scalar,
        lambda s, x, lam: _eq(s, s.abs(s.scale(lam, x)), s.scale(abs(lam), s.abs(x))),
        tags=("abs",)),
    Law("abs-zero", "|x| = 0 ⇒ x = 0", _one,
        lambda s, x: ((not s.eq(s.abs(x), s.zero())) or s.eq(x, s.zero()), s.abs(x), x),
        tags=("abs",)),
    Law("pos-subadditive", "(x + y)⁺ <= x⁺ + y⁺", _two,
        lambda s, x, y: _le(s, s.pos(s.add(x, y)), s.add(s.pos(x), s.pos(y))), tags=("abs",)),
    Law("abs-triangle", "|x + y| <= |x| + |y|", _two,
        lambda s, x, y: _le(s, s.abs(s.add(x, y)), s.add(s.abs(x), s.abs(y))), tags=("abs",)),
    Law("join-formula", "x ∨ y = (x + y)/2 + |(x - y)/2|", _two,
        lambda s, x, y: _eq(s, s.join(x, y), s.add(_half(s, s.add(x, y)), s.abs(_half(s, s.sub(x, y))))),
        tags=("abs",)),
    # order and decomposition
    Law("order-recovery", "x <= y ⇔ x ∨ y = y ⇔ x ∧ y = x", _order_pair,
        _order_recovery_sides, tags=("order",)),
    Law("riesz-decomposition", "x = a' + b', 0 <= a' <= a, 0 <= b' <= b", _decomposition_triple,
        _decomposition_sides, tags=("decomposition",)),
    # unit norms
    Law("norm-triangle", "‖x + y‖_u <= ‖x‖_u + ‖y‖_u", _two_elem_unit,
        lambda s, x, y, u: (
            s.unit_norm(s.add(x, y), u) <= s.unit_norm(x, u) + s.unit_norm(y, u),
            s.unit_norm(s.add(x, y), u), s.unit_norm(x, u) + s.unit_norm(y, u)),
        tags=("norm",)),
    Law("norm-homogeneous", "‖λx‖_u = |λ|‖x‖_u", _elem_scalar_unit,
        lambda s, x, lam, u: (
            s.unit_norm(s.scale(lam, x), u) == abs(lam) * s.unit_norm(x, u),
            s.unit_norm(s.scale(lam, x), u), abs(lam) * s.unit_norm(x, u)),
        tags=("norm",)),
    Law("norm-dominates", "|x| <= ‖x‖_u·u", _elem_unit,
        lambda s, x, u: _le(s, s.abs(x), s.scale(s.unit_norm(x, u), u)),
        archimedean_only=True, tags=("norm",)),
    Law("norm-definite", "‖x‖_u = 0 ⇒ x = 0", _elem_unit,
        lambda s, x, u: (s.unit_norm(x, u) != 0 or s.eq(x, s.zero()), s.unit_norm(x, u), x),
        archimedean_only=True, tags=("norm",)),
    Law("norm-equivalence", "‖x‖_u/‖e‖_u <= ‖x‖_e <= ‖u‖_e·‖x‖_u", _elem_two_units,
        _norm_equivalence_sides, tags=("norm",)),
)

LAWS_BY_NAME = {law.name: law for law in LAWS}

# the fifteen elementary identities/inequalities
ELEMENTARY_LAWS = tuple(law.name for law in LAWS if set(law.tags) & {"basics", "abs"})


def evaluate_law(space: RieszSpace, law: Law | str, inputs: tuple) -> tuple[bool, Any, Any]:
    """Evaluate one law on explicit inputs through the public space API."""
    if isinstance(law, str):
        law = LAWS_BY_NAME[law]
    return law.sides(space, *inputs)


def replay(space: RieszSpace, report: LawReport) -> bool:
    """Re-evaluate a report's counterexample; ``True`` means the law now holds."""
    if report.counterexample is None:
        return True
    holds, _, _ = evaluate_law(space, report.law, report.counterexample.inputs)
    return holds


def check_law(space: RieszSpace, law: Law, case_count: int, rng: random.Random) -> LawReport:
    if law.archimedean_only and not space.archimedean:
        return LawReport(law.name, law.formula, 0, note="skipped: space is not Archimedean")
    for _ in range(case_count):
        inputs = law.sample(space, rng)
        holds, lhs, rhs = law.sides(space, *inputs)
        if not holds:
            return LawReport(law.name, law.formula, case_count, Counterexample(inputs, lhs, rhs))
    return LawReport(law.name, law.formula, case_count)


def check_laws(
    space: RieszSpace,
    case_count: int = 1000,
    seed: int = 0,
    laws: Sequence[Law | str] | None = None,
) -> list[LawReport]:
    """Check every law on ``case_count`` seeded random inputs; one report per law.

    Each law gets its own generator derived from ``(seed, law name)`` so
    selecting a subset of laws does not change the inputs any law sees.
    """
    if case_count < 1:
        raise PreconditionError("case_count must be positive")
    selected = LAWS if laws is None else tuple(
        LAWS_BY_NAME[law] if isinstance(law, str) else law for law in laws
    )
    return [
        check_law(space, law, case_count, random.Random(f"{seed}:{law.name}"))
        for law in selected
    ]


def require_same_length(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise SpaceMismatchError(f"length mismatch: {len(x)} vs {len(y)}")


__all__ = [
    "Counterexample",
    "ELEMENTARY_LAWS",
    "Infinitesimal",
    "LAWS",
    "LAWS_BY_NAME",
    "Law",
    "LawReport",
    "RieszSpace",
    "check_law",
    "check_laws",
    "evaluate_law",
    "replay",
]
