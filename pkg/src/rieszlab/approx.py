"""Constructive lattice Stone-Weierstrass on a finite domain.

Given samples of a target ``g`` on finitely many points, a generator set ``D``
containing the constant ``𝟙`` and separating points, and ``ε > 0``, build a
lattice expression ``g0`` over ``D`` with ``|g - g0| <= ε`` at every domain
point.

The construction splits ``g = g⁺ - g⁻`` and treats each nonnegative part
``p`` with the two covering stages:

1. for each ``z`` and each ``y != z`` take the affine separator ``f_y`` with
   ``f_y(y) = 0`` and ``f_y(z) = p(z)``; the sets
   ``U_y = {x : f_y(x) < p(x) + ε/2}`` cover the domain, and the meet
   ``f'_z`` of a covering family satisfies ``f'_z(z) = p(z)`` and
   ``f'_z <= p + ε/2``;
2. the sets ``V_z = {x : p(x) - ε/2 < f'_z(x)}`` cover the domain, and the
   join ``g0`` of a covering family lies in ``[p - ε/2, p + ε/2]``.

Each part therefore errs by at most ``ε/2`` and the difference of the two
parts by at most ``ε``. Every one of these inequalities is re-checked exactly
while building; a failed check raises :class:`VerificationError`.

On a finite domain the compactness step is trivial: by default *all* ``y``
and *all* ``z`` are kept, which makes ``g0`` reproduce ``g`` exactly on the
domain. ``minimize_cover=True`` instead picks covering subfamilies greedily
(first index wins ties), giving smaller expressions whose error does depend
on ``ε``.

The guarantee is about the sampled points only. Between grid points the
expression can stray arbitrarily far from a continuous target; no modulus of
continuity is assumed. For piecewise-linear targets the continuum error can
be measured exactly with :func:`expr_to_pl` and
:func:`rieszlab.spaces.pl_unit_norm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Optional, Sequence, Union

from .errors import PreconditionError, VerificationError
from .rational import ONE, ZERO, Rational, to_rational
from .spaces import PLFunction, pl_add, pl_join, pl_meet, pl_scale

Point = Hashable


# ---------------------------------------------------------------------------
# expression trees


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Const:
    value: Rational

    def __post_init__(self):
        object.__setattr__(self, "value", to_rational(self.value))


@dataclass(frozen=True)
class Add:
    left: "LatticeExpr"
    right: "LatticeExpr"


@dataclass(frozen=True)
class Scale:
    factor: Rational
    child: "LatticeExpr"

    def __post_init__(self):
        object.__setattr__(self, "factor", to_rational(self.factor))


@dataclass(frozen=True)
class Join:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise PreconditionError("Join needs at least two children")


@dataclass(frozen=True)
class Meet:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise PreconditionError("Meet needs at least two children")


LatticeExpr = Union[Gen, Const, Add, Scale, Join, Meet]


def join_of(children: Sequence[LatticeExpr]) -> LatticeExpr:
    return children[0] if len(children) == 1 else Join(tuple(children))


def meet_of(children: Sequence[LatticeExpr]) -> LatticeExpr:
    return children[0] if len(children) == 1 else Meet(tuple(children))


def expr_size(expr: LatticeExpr) -> int:
    if isinstance(expr, (Gen, Const)):
        return 1
    if isinstance(expr, Add):
        return 1 + expr_size(expr.left) + expr_size(expr.right)
    if isinstance(expr, Scale):
        return 1 + expr_size(expr.child)
    return 1 + sum(expr_size(c) for c in expr.children)


def render(expr: LatticeExpr, names: Sequence[str] | None = None) -> str:
    """Infix text, e.g. ``max(id, 1/2)``."""
    if isinstance(expr, Gen):
        return names[expr.index] if names else f"d{expr.index}"
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Add):
        return f"({render(expr.left, names)} + {render(expr.right, names)})"
    if isinstance(expr, Scale):
        return f"{expr.factor}*{render(expr.child, names)}"
    op = "max" if isinstance(expr, Join) else "min"
    return f"{op}({', '.join(render(c, names) for c in expr.children)})"


# ---------------------------------------------------------------------------
# domains


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Named functions on a common finite domain.

    ``values[point]`` lists the value of every generator at ``point``. One of
    the generators must be the constant 1, and for any two distinct points
    some generator must tell them apart.
    """

    names: tuple
    values: Mapping[Point, tuple]

    def __post_init__(self):
        names = tuple(str(n) for n in self.names)
        table = {p: tuple(to_rational(v) for v in row) for p, row in dict(self.values).items()}
        if not table:
            raise PreconditionError("empty domain")
        for p, row in table.items():
            if len(row) != len(names):
                raise PreconditionError(f"point {p!r} has {len(row)} values for {len(names)} generators")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "values", table)
        units = [k for k in range(len(names)) if all(row[k] == ONE for row in table.values())]
        if not units:
            raise PreconditionError("generator set must contain the constant-one function")
        object.__setattr__(self, "unit_index", units[0])
        rows = list(table.items())
        for i, (p, row_p) in enumerate(rows):
            for q, row_q in rows[i + 1:]:
                if row_p == row_q:
                    raise PreconditionError(f"no generator separates {p!r} and {q!r}")

    @property
    def points(self) -> tuple:
        return tuple(self.values)

    def __len__(self) -> int:
        return len(self.names)

    def value(self, k: int, point: Point) -> Rational:
        if not 0 <= k < len(self.names):
            raise PreconditionError(f"generator index {k} out of range")
        try:
            return self.values[point][k]
        except KeyError:
            raise PreconditionError(f"unknown point {point!r}") from None


@dataclass(frozen=True, eq=False)
class SampledTarget:
    """Values of the target function at every domain point."""

    values: Mapping[Point, Rational]

    def __post_init__(self):
        table = {p: to_rational(v) for p, v in dict(self.values).items()}
        if not table:
            raise PreconditionError("empty domain")
        object.__setattr__(self, "values", table)

    @classmethod
    def from_function(cls, points: Iterable[Point], fn: Callable[[Point], Rational]) -> "SampledTarget":
        return cls({p: fn(p) for p in points})

    @property
    def points(self) -> tuple:
        return tuple(self.values)

    def __getitem__(self, point: Point) -> Rational:
        return self.values[point]


def uniform_grid(size: int) -> tuple:
    """``size`` equally spaced rationals from 0 to 1."""
    if size < 1:
        raise PreconditionError("grid needs at least one point")
    if size == 1:
        return (ZERO,)
    return tuple(to_rational(i) / (size - 1) for i in range(size))


def unital_affine(points: Iterable) -> GeneratorSet:
    """``{𝟙, id}`` on rational points of ``[0, 1]``."""
    return GeneratorSet(("one", "id"), {p: (ONE, to_rational(p)) for p in points})


def unital_affine_pl() -> tuple[PLFunction, PLFunction]:
    return PLFunction.constant(1), PLFunction.identity()


# ---------------------------------------------------------------------------
# evaluation


def evaluate_on(expr: LatticeExpr, D: GeneratorSet, points: Sequence[Point] | None = None) -> tuple:
    """Values of ``expr`` at ``points`` (all of D's points by default)."""
    points = D.points if points is None else tuple(points)
    cache: dict[int, tuple] = {}

    def ev(e) -> tuple:
        key = id(e)
        if key in cache:
            return cache[key]
        if isinstance(e, Gen):
            out = tuple(D.value(e.index, p) for p in points)
        elif isinstance(e, Const):
            out = (e.value,) * len(points)
        elif isinstance(e, Add):
            out = tuple(a + b for a, b in zip(ev(e.left), ev(e.right)))
        elif isinstance(e, Scale):
            out = tuple(e.factor * a for a in ev(e.child))
        elif isinstance(e, Join):
            out = tuple(max(vs) for vs in zip(*(ev(c) for c in e.children)))
        elif isinstance(e, Meet):
            out = tuple(min(vs) for vs in zip(*(ev(c) for c in e.children)))
        else:
            raise TypeError(f"not a lattice expression: {e!r}")
        cache[key] = out
        return out

    return ev(expr)


def eval_expr(expr: LatticeExpr, D: GeneratorSet, point: Point) -> Rational:
    if point not in D.values:
        raise PreconditionError(f"unknown point {point!r}")
    return evaluate_on(expr, D, (point,))[0]


def expr_error(expr: LatticeExpr, D: GeneratorSet, g: SampledTarget) -> Rational:
    """``max_x |g(x) - expr(x)|`` over the target's domain."""
    values = evaluate_on(expr, D, g.points)
    return max(abs(g[p] - v) for p, v in zip(g.points, values))


def expr_to_pl(expr: LatticeExpr, generators: Sequence[Optional[PLFunction]]) -> PLFunction:
    """Evaluate ``expr`` in the piecewise-linear Riesz space."""
    cache: dict[int, PLFunction] = {}

    def ev(e) -> PLFunction:
        key = id(e)
        if key in cache:
            return cache[key]
        if isinstance(e, Gen):
            if not 0 <= e.index < len(generators) or generators[e.index] is None:
                raise PreconditionError(f"generator {e.index} has no piecewise-linear realisation")
            out = generators[e.index]
        elif isinstance(e, Const):
            out = PLFunction.constant(e.value)
        elif isinstance(e, Add):
            out = pl_add(ev(e.left), ev(e.right))
        elif isinstance(e, Scale):
            out = pl_scale(e.factor, ev(e.child))
        elif isinstance(e, (Join, Meet)):
            combine = pl_join if isinstance(e, Join) else pl_meet
            children = [ev(c) for c in e.children]
            out = children[0]
            for c in children[1:]:
                out = combine(out, c)
        else:
            raise TypeError(f"not a lattice expression: {e!r}")
        cache[key] = out
        return out

    return ev(expr)


# ---------------------------------------------------------------------------
# construction


def separator(y: Point, z: Point, g_z, D: GeneratorSet) -> LatticeExpr:
    """Affine ``f_y = g_z/(f(z) - f(y)) · (f - f(y)𝟙)`` for the first generator
    ``f`` with ``f(y) != f(z)``; it vanishes at ``y`` and equals ``g_z`` at ``z``."""
    if y == z:
        raise PreconditionError("separator needs two distinct points")
    g_z = to_rational(g_z)
    for k in range(len(D)):
        fy, fz = D.value(k, y), D.value(k, z)
        if fy != fz:
            shifted = Gen(k) if fy == 0 else Add(Gen(k), Const(-fy))
            return Scale(g_z / (fz - fy), shifted)
    raise PreconditionError(f"no generator separates {y!r} and {z!r}")


@dataclass(frozen=True)
class ZStage:
    z: Point
    ys: tuple
    expr: LatticeExpr
    values: tuple


@dataclass(frozen=True)
class PartConstruction:
    """How one nonnegative part was approximated."""

    name: str
    target: tuple
    stages: tuple  # tuple[ZStage, ...], one per z in domain order
    zs: tuple
    expr: LatticeExpr
    values: tuple


@dataclass(frozen=True)
class SWConstruction:
    points: tuple
    eps: Rational
    parts: tuple  # (positive part, negative part)
    expr: LatticeExpr
    values: tuple


def _greedy_cover(candidates: Sequence, covers: Mapping, universe: Sequence) -> list:
    uncovered = set(universe)
    chosen = []
    while uncovered:
        best = max(candidates, key=lambda c: len(covers[c] & uncovered))
        gain = covers[best] & uncovered
        if not gain:
            raise VerificationError("covering family does not cover the domain")
        chosen.append(best)
        uncovered -= gain
    order = {c: i for i, c in enumerate(candidates)}
    return sorted(chosen, key=order.__getitem__)


def _check_cover(chosen: Iterable, covers: Mapping, universe: Sequence, what: str) -> None:
    covered = set()
    for c in chosen:
        covered |= covers[c]
    if covered != set(universe):
        raise VerificationError(f"{what} sets do not cover the domain")


def _approximate_part(
    name: str, part: Mapping, D: GeneratorSet, eps: Rational, minimize_cover: bool
) -> PartConstruction:
    points = tuple(part)
    target = tuple(part[p] for p in points)
    half = eps / 2
    if len(points) == 1:
        expr = Const(target[0])
        return PartConstruction(name, target, (), points, expr, target)

    stages = []
    for zi, z in enumerate(points):
        ys = [y for y in points if y != z]
        f = {y: separator(y, z, part[z], D) for y in ys}
        fv = {y: evaluate_on(f[y], D, points) for y in ys}
        U = {y: {p for p, a, b in zip(points, fv[y], target) if a < b + half} for y in ys}
        chosen = _greedy_cover(ys, U, points) if minimize_cover else ys
        _check_cover(chosen, U, points, "U")
        expr = meet_of([f[y] for y in chosen])
        values = tuple(min(col) for col in zip(*(fv[y] for y in chosen)))
        if values[zi] != target[zi]:
            raise VerificationError(f"f'_z({z!r}) = {values[zi]} differs from {target[zi]}")
        if any(a > b + half for a, b in zip(values, target)):
            raise VerificationError(f"f'_z for z={z!r} exceeds the target by more than ε/2")
        stages.append(ZStage(z, tuple(chosen), expr, values))

    V = {s.z: {p for p, a, b in zip(points, s.values, target) if b - half < a} for s in stages}
    zs = _greedy_cover(points, V, points) if minimize_cover else list(points)
    _check_cover(zs, V, points, "V")
    by_z = {s.z: s for s in stages}
    expr = join_of([by_z[z].expr for z in zs])
    values = tuple(max(col) for col in zip(*(by_z[z].values for z in zs)))
    if any(not (b - half <= a <= b + half) for a, b in zip(values, target)):
        raise VerificationError("joined approximation leaves the ε/2 band")
    return PartConstruction(name, target, tuple(stages), tuple(zs), expr, values)


def sw_construct(
    g: SampledTarget, D: GeneratorSet, eps, *, minimize_cover: bool = False
) -> SWConstruction:
    """Run the construction and keep every intermediate for inspection."""
    eps = to_rational(eps)
    if eps <= 0:
        raise PreconditionError("ε must be positive")
    points = g.points
    missing = [p for p in points if p not in D.values]
    if missing or len(points) != len(D.points):
        raise PreconditionError("target and generators must share one domain")
    plus = {p: max(g[p], ZERO) for p in points}
    minus = {p: max(-g[p], ZERO) for p in points}
    pos = _approximate_part("positive", plus, D, eps, minimize_cover)
    neg = _approximate_part("negative", minus, D, eps, minimize_cover)
    if len(points) == 1:
        expr = Const(g[points[0]])
    else:
        expr = Add(pos.expr, Scale(-ONE, neg.expr))
    values = evaluate_on(expr, D, points)
    if any(abs(v - g[p]) > eps for p, v in zip(points, values)):
        raise VerificationError("final approximation error exceeds ε")
    return SWConstruction(points, eps, (pos, neg), expr, values)


def sw_approximate(
    g: SampledTarget, D: GeneratorSet, eps, *, minimize_cover: bool = False
) -> LatticeExpr:
    """A lattice expression over ``D`` within ``eps`` of ``g`` on the domain."""
    return sw_construct(g, D, eps, minimize_cover=minimize_cover).expr


__all__ = [
    "Add",
    "Const",
    "Gen",
    "GeneratorSet",
    "Join",
    "LatticeExpr",
    "Meet",
    "PartConstruction",
    "SWConstruction",
    "SampledTarget",
    "Scale",
    "ZStage",
    "eval_expr",
    "evaluate_on",
    "expr_error",
    "expr_size",
    "expr_to_pl",
    "join_of",
    "meet_of",
    "render",
    "separator",
    "sw_approximate",
    "sw_construct",
    "uniform_grid",
    "unital_affine",
    "unital_affine_pl",
]
