"""Concrete Riesz spaces.

* :class:`FinDimSpace` -- ``R^n`` with the pointwise order, i.e. ``C(X)`` for a
  finite discrete ``X``.
* :class:`LexPlane` -- ``R^2`` with the lexicographic order. Totally ordered,
  not Archimedean.
* :class:`PLSpace` -- continuous piecewise-linear functions on ``[0, 1]`` with
  rational breakpoints. It is a unital, point-separating Riesz subspace of
  ``C[0,1]`` but it is *not* uniformly complete (its sup-norm closure is all
  of ``C[0,1]``), which is exactly why completeness is demanded of the
  objects on the algebra side of the duality. No completion is attempted.

Exact unit-norm formulas
------------------------
``R^n``: ``‖x‖_u = max_i |x_i| / u_i``. ``|x| <= λu`` is coordinatewise, so the
least admissible ``λ`` is the largest coordinate ratio.

Lex plane: ``‖x‖_u = |x|_0 / u_0``. Write ``|x| = (a, b)``. If ``a > 0`` every
``λ > a/u_0`` is admissible and no ``λ < a/u_0`` is. If ``a = 0`` then ``b >= 0``
and every ``λ > 0`` is admissible, so the infimum is ``0`` even when ``x != 0``.

PL: ``‖f‖_u = max |f|(t)/u(t)`` over the breakpoints of ``|f|`` and ``u``
merged. Between consecutive merged breakpoints ``|f| = p`` and ``u = q`` are
affine with ``q > 0``; ``(p/q)' = (p'q - pq')/q^2`` and ``p'q - pq'`` is
constant on the segment, so the ratio is monotone and peaks at an endpoint.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import Infinitesimal, RieszSpace
from .errors import NotAUnitError, PreconditionError, SpaceMismatchError
from gmpy2 import mpq

from .rational import ONE, ZERO, Rational, random_positive, random_rational, to_rational

Vector = tuple  # tuple[Rational, ...]


def as_vector(obj: Iterable) -> Vector:
    return tuple(to_rational(c) for c in obj)


class FinDimSpace(RieszSpace):
    """``R^n`` ordered pointwise; the default unit is the all-ones vector."""

    archimedean = True

    def __init__(self, n: int, unit: Optional[Sequence] = None):
        if not isinstance(n, int) or n < 1:
            raise PreconditionError(f"dimension must be a positive integer, got {n!r}")
        self.n = n
        self.descriptor = f"fin:{n}"
        self._unit = (ONE,) * n
        if unit is not None:
            u = self.element(unit)
            if not self.is_unit(u):
                raise NotAUnitError(f"{unit!r} is not a unit of R^{n}")
            self._unit = u

    @property
    def unit(self) -> Vector:
        return self._unit

    def element(self, obj) -> Vector:
        x = as_vector(obj)
        if len(x) != self.n:
            raise SpaceMismatchError(f"expected {self.n} coordinates, got {len(x)}")
        return x

    def _check(self, *xs: Vector) -> None:
        for x in xs:
            if len(x) != self.n:
                raise SpaceMismatchError(f"expected {self.n} coordinates, got {len(x)}")

    def zero(self) -> Vector:
        return (ZERO,) * self.n

    def add(self, x, y):
        self._check(x, y)
        return tuple(a + b for a, b in zip(x, y))

    def neg(self, x):
        self._check(x)
        return tuple(-a for a in x)

    def scale(self, lam, x):
        self._check(x)
        lam = to_rational(lam)
        return tuple(lam * a for a in x)

    def join(self, x, y):
        self._check(x, y)
        return tuple(max(a, b) for a, b in zip(x, y))

    def meet(self, x, y):
        self._check(x, y)
        return tuple(min(a, b) for a, b in zip(x, y))

    def is_unit(self, u) -> bool:
        return len(u) == self.n and all(c > 0 for c in u)

    def _unit_norm(self, x, u) -> Rational:
        self._check(x)
        return max(abs(a) / b for a, b in zip(x, u))

    def find_infinitesimal(self) -> None:
        # n·ε <= b for all n ∈ Z forces every coordinate of ε to vanish
        return None

    def random_element(self, rng: random.Random) -> Vector:
        return tuple(random_rational(rng) for _ in range(self.n))

    def random_unit(self, rng: random.Random) -> Vector:
        return tuple(random_positive(rng) for _ in range(self.n))

    def __eq__(self, other):
        return type(other) is type(self) and other.n == self.n and other._unit == self._unit

    def __hash__(self):
        return hash((type(self), self.n, self._unit))


class LexPlane(RieszSpace):
    """``R^2`` with ``(x, y) <= (x', y')`` iff ``x < x'`` or ``x = x'`` and ``y <= y'``.

    Python compares tuples lexicographically, so join and meet are just
    ``max`` and ``min``.
    """

    descriptor = "lex"
    archimedean = False

    def __init__(self, unit: Optional[Sequence] = None):
        self._unit = (ONE, ZERO)
        if unit is not None:
            u = self.element(unit)
            if not self.is_unit(u):
                raise NotAUnitError(f"{unit!r} is not a unit of the lex plane")
            self._unit = u

    @property
    def unit(self) -> Vector:
        return self._unit

    def element(self, obj) -> Vector:
        x = as_vector(obj)
        if len(x) != 2:
            raise SpaceMismatchError(f"lex plane elements have 2 coordinates, got {len(x)}")
        return x

    def zero(self):
        return (ZERO, ZERO)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def scale(self, lam, x):
        lam = to_rational(lam)
        return (lam * x[0], lam * x[1])

    def join(self, x, y):
        return max(x, y)

    def meet(self, x, y):
        return min(x, y)

    def is_unit(self, u) -> bool:
        # (0, y) never dominates (1, 0); any positive first coordinate does
        return len(u) == 2 and u[0] > 0

    def _unit_norm(self, x, u) -> Rational:
        return self.abs(x)[0] / u[0]

    def find_infinitesimal(self) -> Infinitesimal:
        return Infinitesimal(
            eps=(ZERO, ONE),
            bound=(ONE, ZERO),
            certificate="n·(0,1) = (0,n) and 0 < 1, so (0,n) <_lex (1,0) for every integer n",
        )

    def random_element(self, rng: random.Random) -> Vector:
        # shared first coordinates make the tie-breaking branch common
        first = random_rational(rng, bound=3, max_den=2) if rng.randrange(2) else random_rational(rng)
        return (first, random_rational(rng))

    def random_unit(self, rng: random.Random) -> Vector:
        return (random_positive(rng), random_rational(rng))

    def __eq__(self, other):
        return type(other) is type(self) and other._unit == self._unit

    def __hash__(self):
        return hash((type(self), self._unit))


# ---------------------------------------------------------------------------
# piecewise-linear functions on [0, 1]


def _canonical(t: Sequence, v: Sequence) -> tuple[tuple, tuple]:
    # dropping a point never changes the slope of its neighbours' segments,
    # so comparing adjacent original segments is enough
    dt = [b - a for a, b in zip(t, t[1:])]
    dv = [b - a for a, b in zip(v, v[1:])]
    keep = [0]
    keep.extend(i for i in range(1, len(t) - 1) if dv[i - 1] * dt[i] != dv[i] * dt[i - 1])
    keep.append(len(t) - 1)
    if len(keep) == len(t):
        return tuple(t), tuple(v)
    return tuple(t[i] for i in keep), tuple(v[i] for i in keep)


@dataclass(frozen=True)
class PLFunction:
    """Continuous piecewise-linear interpolant of ``(t[i], v[i])`` on ``[0, 1]``.

    Stored in canonical form: interior breakpoints where the slope does not
    change are dropped on construction, so ``==`` is semantic equality.
    """

    t: tuple
    v: tuple

    def __post_init__(self):
        t = as_vector(self.t)
        v = as_vector(self.v)
        if len(t) < 2 or len(t) != len(v):
            raise PreconditionError("need at least two breakpoints and one value per breakpoint")
        if t[0] != 0 or t[-1] != 1:
            raise PreconditionError("breakpoints must start at 0 and end at 1")
        if any(b <= a for a, b in zip(t, t[1:])):
            raise PreconditionError("breakpoints must be strictly increasing")
        t, v = _canonical(t, v)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "v", v)

    @classmethod
    def _trusted(cls, t: Sequence, v: Sequence) -> "PLFunction":
        # internal results are already exact rationals on a sorted grid
        f = object.__new__(cls)
        t, v = _canonical(t, v)
        object.__setattr__(f, "t", t)
        object.__setattr__(f, "v", v)
        return f

    @classmethod
    def constant(cls, c) -> "PLFunction":
        c = to_rational(c)
        return cls((ZERO, ONE), (c, c))

    @classmethod
    def identity(cls) -> "PLFunction":
        return cls((ZERO, ONE), (ZERO, ONE))

    def __call__(self, t) -> Rational:
        return pl_eval(self, t)

    def __repr__(self) -> str:
        pts = ", ".join(f"{a}:{b}" for a, b in zip(self.t, self.v))
        return f"PLFunction({pts})"


def pl_eval(f: PLFunction, t) -> Rational:
    t = to_rational(t)
    if not 0 <= t <= 1:
        raise PreconditionError(f"t = {t} lies outside [0, 1]")
    i = bisect.bisect_left(f.t, t)
    if f.t[i] == t:
        return f.v[i]
    t0, t1, v0, v1 = f.t[i - 1], f.t[i], f.v[i - 1], f.v[i]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def _merged(f: PLFunction, g: PLFunction):
    """Union of breakpoints with both functions evaluated there, in one sweep."""
    ft, fv, gt, gv = f.t, f.v, g.t, g.v
    ts, fs, gs = [], [], []
    i = j = 0
    while i < len(ft) and j < len(gt):
        a, b = ft[i], gt[j]
        if a == b:
            ts.append(a)
            fs.append(fv[i])
            gs.append(gv[j])
            i += 1
            j += 1
        elif a < b:
            ts.append(a)
            fs.append(fv[i])
            gs.append(gv[j - 1] + (gv[j] - gv[j - 1]) * (a - gt[j - 1]) / (b - gt[j - 1]))
            i += 1
        else:
            ts.append(b)
            gs.append(gv[j])
            fs.append(fv[i - 1] + (fv[i] - fv[i - 1]) * (b - ft[i - 1]) / (a - ft[i - 1]))
            j += 1
    return ts, fs, gs


def _envelope(f: PLFunction, g: PLFunction, pick) -> PLFunction:
    """Pointwise ``pick`` (max or min) of f and g, inserting sign changes of f - g."""
    ts, fv, gv = _merged(f, g)
    out_t, out_v = [ts[0]], [pick(fv[0], gv[0])]
    d0 = fv[0] - gv[0]
    for i in range(1, len(ts)):
        d1 = fv[i] - gv[i]
        if (d0 < 0 < d1) or (d1 < 0 < d0):
            s = d0 / (d0 - d1)
            out_t.append(ts[i - 1] + s * (ts[i] - ts[i - 1]))
            out_v.append(fv[i - 1] + s * (fv[i] - fv[i - 1]))
        out_t.append(ts[i])
        out_v.append(pick(fv[i], gv[i]))
        d0 = d1
    return PLFunction._trusted(out_t, out_v)


def pl_join(f: PLFunction, g: PLFunction) -> PLFunction:
    return _envelope(f, g, max)


def pl_meet(f: PLFunction, g: PLFunction) -> PLFunction:
    return _envelope(f, g, min)


def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
    ts, fv, gv = _merged(f, g)
    return PLFunction._trusted(ts, [a + b for a, b in zip(fv, gv)])


def pl_scale(lam, f: PLFunction) -> PLFunction:
    lam = to_rational(lam)
    if lam == 0:
        return PLFunction._trusted((ZERO, ONE), (ZERO, ZERO))
    return PLFunction._trusted(f.t, [lam * a for a in f.v])


def pl_negate(f: PLFunction) -> PLFunction:
    return PLFunction._trusted(f.t, [-a for a in f.v])


def pl_is_unit(u: PLFunction) -> bool:
    return min(u.v) > 0


def pl_unit_norm(f: PLFunction, u: PLFunction) -> Rational:
    if not pl_is_unit(u):
        raise NotAUnitError("a PL unit must be strictly positive on [0, 1]")
    absf = pl_join(f, pl_negate(f))
    ts, av, uv = _merged(absf, u)
    return max(a / b for a, b in zip(av, uv))


class PLSpace(RieszSpace):
    """Piecewise-linear functions on ``[0, 1]``; default unit is the constant 1."""

    descriptor = "pl"
    archimedean = True

    def __init__(self, unit: Optional[PLFunction] = None, max_interior: int = 3):
        self.max_interior = max_interior
        self._unit = PLFunction.constant(1)
        if unit is not None:
            u = self.element(unit)
            if not pl_is_unit(u):
                raise NotAUnitError("a PL unit must be strictly positive on [0, 1]")
            self._unit = u

    @property
    def unit(self) -> PLFunction:
        return self._unit

    def element(self, obj) -> PLFunction:
        if isinstance(obj, PLFunction):
            return obj
        if isinstance(obj, dict) and set(obj) >= {"t", "v"}:
            return PLFunction(obj["t"], obj["v"])
        raise SpaceMismatchError(f"cannot read {obj!r} as a piecewise-linear function")

    def zero(self):
        return PLFunction.constant(0)

    def add(self, x, y):
        return pl_add(x, y)

    def neg(self, x):
        return pl_negate(x)

    def scale(self, lam, x):
        return pl_scale(lam, x)

    def join(self, x, y):
        return pl_join(x, y)

    def meet(self, x, y):
        return pl_meet(x, y)

    def is_unit(self, u) -> bool:
        return isinstance(u, PLFunction) and pl_is_unit(u)

    def _unit_norm(self, x, u) -> Rational:
        return pl_unit_norm(x, u)

    def find_infinitesimal(self) -> None:
        # evaluating n·ε <= b at each breakpoint reduces to the R^k argument
        return None

    def _random_breakpoints(self, rng: random.Random) -> list:
        k = rng.randint(0, self.max_interior)
        inner = {mpq(rng.randint(1, 19), 20) for _ in range(k)}
        return [ZERO, *sorted(inner), ONE]

    def random_element(self, rng: random.Random) -> PLFunction:
        ts = self._random_breakpoints(rng)
        return PLFunction(ts, [random_rational(rng) for _ in ts])

    def random_unit(self, rng: random.Random) -> PLFunction:
        ts = self._random_breakpoints(rng)
        return PLFunction(ts, [random_positive(rng) for _ in ts])

    def __eq__(self, other):
        return type(other) is type(self) and other._unit == self._unit

    def __hash__(self):
        return hash((type(self), self._unit))


def parse_space(descriptor: str) -> RieszSpace:
    """Build a space from ``"fin:n"``, ``"lex"`` or ``"pl"``."""
    text = descriptor.strip().lower()
    if text == "lex":
        return LexPlane()
    if text == "pl":
        return PLSpace()
    if text.startswith("fin:"):
        try:
            n = int(text[4:])
        except ValueError:
            raise PreconditionError(f"malformed space descriptor {descriptor!r}") from None
        return FinDimSpace(n)
    raise PreconditionError(f"unknown space descriptor {descriptor!r} (use fin:n, lex or pl)")
