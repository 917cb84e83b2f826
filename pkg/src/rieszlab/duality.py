"""Yosida duality between finite discrete spaces and unital ``R^n``.

The two functors, restricted to finite objects:

* ``C`` sends a finite space ``X`` to ``R^X`` with unit ``𝟙`` and a map
  ``f: X -> Y`` to precomposition ``C(f): R^Y -> R^X``, ``g ↦ g ∘ f``.
* ``Φ`` sends ``(R^n, u)`` to its spectrum, the unit-preserving Riesz
  homomorphisms ``R^n -> R`` (exactly the ``x ↦ x_i / u_i``), and a
  homomorphism ``h`` to precomposition ``φ ↦ φ ∘ h``.

Topology is not modelled. Finite discrete spaces are compact Hausdorff, every
map out of them is continuous and points are separated by indicator
functions, so the continuity and convergence arguments of the general
theorem turn into finite equality checks. Likewise the density step in
``CΦ(E) ≅ E`` becomes a dimension count: the transform is injective between
spaces of equal finite dimension.

Spectra are always listed in coordinate order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .core import Counterexample, LawReport
from .errors import NotAUnitError, PreconditionError, SpaceMismatchError, VerificationError
from .ideals import FinHom, SpectrumPoint, random_hom, separating_hom
from .rational import ONE, Rational, random_positive, random_rational
from .spaces import FinDimSpace, Vector, as_vector


@dataclass(frozen=True)
class FiniteSpace:
    """A finite discrete space, given by its distinct point labels."""

    points: tuple

    def __post_init__(self):
        pts = tuple(str(p) for p in self.points)
        if not pts:
            raise PreconditionError("a finite space needs at least one point")
        if len(set(pts)) != len(pts):
            raise PreconditionError("point labels must be unique")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise PreconditionError(f"unknown point {label!r}") from None


@dataclass(frozen=True)
class SpaceMap:
    """A (necessarily continuous) map between finite spaces."""

    source: FiniteSpace
    target: FiniteSpace
    assignment: Mapping[str, str] = field(hash=False)

    def __post_init__(self):
        assignment = {str(k): str(v) for k, v in dict(self.assignment).items()}
        if set(assignment) != set(self.source.points):
            raise PreconditionError("a space map must be defined on every source point")
        for v in assignment.values():
            self.target.index(v)
        object.__setattr__(self, "assignment", assignment)

    def __call__(self, label: str) -> str:
        return self.assignment[label]

    @classmethod
    def identity(cls, X: FiniteSpace) -> "SpaceMap":
        return cls(X, X, {p: p for p in X.points})

    def compose(self, inner: "SpaceMap") -> "SpaceMap":
        """``self ∘ inner``."""
        if inner.target != self.source:
            raise SpaceMismatchError("maps are not composable")
        return SpaceMap(inner.source, self.target, {p: self(inner(p)) for p in inner.source.points})

    def __eq__(self, other):
        return (
            isinstance(other, SpaceMap)
            and (self.source, self.target) == (other.source, other.target)
            and self.assignment == other.assignment
        )


def _require_unit(u) -> Vector:
    u = as_vector(u)
    if not u or not FinDimSpace(len(u)).is_unit(u):
        raise NotAUnitError(f"{u!r} is not a unit of R^{len(u)}")
    return u


def spectrum(u: Sequence) -> list[SpectrumPoint]:
    """``Φ(R^n, u)``: the points ``x ↦ x_i / u_i`` in index order."""
    u = _require_unit(u)
    return [SpectrumPoint(i, 1 / c) for i, c in enumerate(u)]


def spectrum_space(u: Sequence) -> FiniteSpace:
    """The spectrum as a finite space, labelled ``phi0, phi1, ...``."""
    return FiniteSpace(tuple(f"phi{p.index}" for p in spectrum(u)))


def unit_change_iso(e: Sequence, u: Sequence, probes: int = 50, seed: int = 0) -> dict:
    """The bijection ``Φ_e -> Φ_u``, ``φ ↦ (x ↦ φ(x)/φ(u))``, checked on probes."""
    e, u = _require_unit(e), _require_unit(u)
    if len(e) != len(u):
        raise SpaceMismatchError("units live in different spaces")
    source, target = spectrum(e), spectrum(u)
    rng = random.Random(f"{seed}:unit-change")
    xs = [e, u, *(tuple(random_rational(rng) for _ in u) for _ in range(probes))]
    iso = {}
    for phi in source:
        scale = phi(u)
        image = next(
            (psi for psi in target if all(psi(x) == phi(x) / scale for x in xs)), None
        )
        if image is None:
            raise VerificationError(f"no spectrum point of u matches {phi} rescaled")
        iso[phi] = image
    if len(set(iso.values())) != len(target):
        raise VerificationError("unit change is not a bijection")
    return iso


def yosida_transform(x: Sequence, u: Sequence) -> Vector:
    """``x̂``: the function ``φ ↦ φ(x)`` tabulated over the spectrum."""
    u = _require_unit(u)
    x = as_vector(x)
    if len(x) != len(u):
        raise SpaceMismatchError("element and unit have different lengths")
    return tuple(phi(x) for phi in spectrum(u))


def inverse_transform(y: Sequence, u: Sequence) -> Vector:
    u = _require_unit(u)
    return tuple(a * c for a, c in zip(as_vector(y), u))


def c_of_space(X: FiniteSpace) -> tuple[FinDimSpace, Vector]:
    """``C(X) = R^|X|`` in label order, with unit 𝟙."""
    space = FinDimSpace(len(X))
    return space, space.unit


def c_of_map(f: SpaceMap) -> FinHom:
    """``C(f): C(Y) -> C(X)``, ``g ↦ g ∘ f``."""
    return FinHom(len(f.target), tuple((f.target.index(f(p)), ONE) for p in f.source.points))


def phi_of_hom(h: FinHom, u: Sequence, u_target: Sequence) -> dict:
    """``Φ(h): Φ(E') -> Φ(E)``, ``φ ↦ φ ∘ h``, as a dict of spectrum points."""
    u, u_target = _require_unit(u), _require_unit(u_target)
    if len(u) != h.n:
        raise SpaceMismatchError("unit does not match the source of h")
    if not h.is_unit_preserving(u, u_target):
        raise PreconditionError("Φ is only defined on unit-preserving homomorphisms")
    source_points = {p.index: p for p in spectrum(u)}
    out = {}
    for phi in spectrum(u_target):
        # (φ∘h)(x) = c_j/u'_j · x_σ(j) and c_j·u_σ(j) = u'_j, so this is the point σ(j)
        image = source_points[h.assign[phi.index][0]]
        out[phi] = image
    return out


def phi_map_as_space_map(h: FinHom, u: Sequence, u_target: Sequence) -> SpaceMap:
    """``Φ(h)`` between the labelled spectra."""
    table = phi_of_hom(h, u, u_target)
    return SpaceMap(
        spectrum_space(u_target),
        spectrum_space(u),
        {f"phi{phi.index}": f"phi{psi.index}" for phi, psi in table.items()},
    )


def delta(X: FiniteSpace, label: str) -> SpectrumPoint:
    """Point evaluation ``δ_x(f) = f(x)`` on ``C(X)``."""
    return SpectrumPoint(X.index(label), ONE)


def roundtrip_space(X: FiniteSpace) -> dict:
    """``x ↦ δ_x`` as a verified bijection ``X -> ΦC(X)``."""
    _, one = c_of_space(X)
    image = {p: delta(X, p) for p in X.points}
    if len(set(image.values())) != len(X):
        raise VerificationError("x ↦ δ_x is not injective")
    if set(image.values()) != set(spectrum(one)):
        raise VerificationError("x ↦ δ_x is not onto the spectrum")
    return image


@dataclass(frozen=True)
class YosidaIso:
    """The verified isomorphism ``x ↦ x̂`` from ``(R^n, u)`` onto ``C(Φ(R^n, u))``."""

    unit: Vector

    def forward(self, x) -> Vector:
        return yosida_transform(x, self.unit)

    def inverse(self, y) -> Vector:
        return inverse_transform(y, self.unit)


def roundtrip_algebra(u: Sequence, cases: int = 200, seed: int = 0) -> YosidaIso:
    """Verify ``x ↦ x̂`` is a unit-preserving Riesz isomorphism ``E -> CΦ(E)``."""
    u = _require_unit(u)
    n = len(u)
    E = FinDimSpace(n, u)
    C = FinDimSpace(n)
    iso = YosidaIso(u)
    hat = iso.forward
    if hat(u) != C.unit:
        raise VerificationError("the unit does not map to 𝟙")
    if len(spectrum(u)) != n:
        raise VerificationError("spectrum size differs from the dimension")
    rng = random.Random(f"{seed}:roundtrip-algebra")
    for _ in range(cases):
        x, y = E.sample(rng), E.sample(rng)
        lam = random_rational(rng)
        checks = (
            (hat(E.add(x, y)), C.add(hat(x), hat(y))),
            (hat(E.scale(lam, x)), C.scale(lam, hat(x))),
            (hat(E.join(x, y)), C.join(hat(x), hat(y))),
            (hat(E.meet(x, y)), C.meet(hat(x), hat(y))),
        )
        for lhs, rhs in checks:
            if lhs != rhs:
                raise VerificationError(f"x ↦ x̂ is not a Riesz homomorphism at x={x}, y={y}")
        if x != E.zero():
            phi = separating_hom(x, u)
            if hat(x)[phi.index] == 0:
                raise VerificationError(f"x̂ vanishes for nonzero x={x}")
        # equal dimensions plus injectivity give surjectivity; check the inverse anyway
        if iso.inverse(hat(x)) != x or hat(iso.inverse(y)) != y:
            raise VerificationError("transform and inverse disagree")
    return iso


def check_naturality(
    morphism: Union[FinHom, SpaceMap],
    u: Sequence | None = None,
    samples: int = 200,
    seed: int = 0,
) -> LawReport:
    """Check the naturality square for a homomorphism or a space map.

    For ``h: (R^n, u) -> (R^m, h(u))``: ``CΦ(h)(x̂) = \\widehat{h(x)}``.
    For ``f: X -> Y``: ``ΦC(f)(δ_x) = δ_{f(x)}``.
    """
    rng = random.Random(f"{seed}:naturality")
    if isinstance(morphism, SpaceMap):
        f = morphism
        formula = "ΦC(f) ∘ δ = δ ∘ f"
        phi_c = phi_of_hom(c_of_map(f), c_of_space(f.target)[1], c_of_space(f.source)[1])
        for p in f.source.points:
            lhs, rhs = phi_c[delta(f.source, p)], delta(f.target, f(p))
            if lhs != rhs:
                return LawReport("naturality-delta", formula, len(f.source),
                                 Counterexample((p,), lhs, rhs))
        return LawReport("naturality-delta", formula, len(f.source))

    h = morphism
    formula = "CΦ(h) ∘ (·̂) = (·̂) ∘ h"
    u = FinDimSpace(h.n).unit if u is None else _require_unit(u)
    u_target = h(u)
    c_phi_h = c_of_map(phi_map_as_space_map(h, u, u_target))
    E = FinDimSpace(h.n, u)
    for _ in range(samples):
        x = E.sample(rng)
        lhs = c_phi_h(yosida_transform(x, u))
        rhs = yosida_transform(h(x), u_target)
        if lhs != rhs:
            return LawReport("naturality-yosida", formula, samples, Counterexample((x,), lhs, rhs))
    return LawReport("naturality-yosida", formula, samples)


def labelled_space(size: int, prefix: str = "p") -> FiniteSpace:
    return FiniteSpace(tuple(f"{prefix}{i}" for i in range(size)))


def random_space_map(rng: random.Random, X: FiniteSpace, Y: FiniteSpace) -> SpaceMap:
    return SpaceMap(X, Y, {p: rng.choice(Y.points) for p in X.points})


def random_unit(rng: random.Random, n: int) -> Vector:
    return tuple(random_positive(rng, bound=20) for _ in range(n))


def random_unit_preserving_hom(rng: random.Random, n: int, m: int, u: Sequence) -> tuple[FinHom, Vector]:
    """A random ``h: R^n -> R^m`` together with the unit ``h(u)`` it preserves."""
    h = random_hom(rng, n, m)
    return h, h(as_vector(u))


__all__ = [
    "FiniteSpace",
    "SpaceMap",
    "SpectrumPoint",
    "YosidaIso",
    "c_of_map",
    "c_of_space",
    "check_naturality",
    "delta",
    "inverse_transform",
    "phi_map_as_space_map",
    "phi_of_hom",
    "labelled_space",
    "random_space_map",
    "random_unit",
    "random_unit_preserving_hom",
    "roundtrip_algebra",
    "roundtrip_space",
    "spectrum",
    "spectrum_space",
    "unit_change_iso",
    "yosida_transform",
]
