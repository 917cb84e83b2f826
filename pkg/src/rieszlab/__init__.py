"""Exact Riesz spaces: lattice algebra, ideals, Yosida duality at finite
scale, and lattice Stone-Weierstrass approximation."""

from .approx import (
    GeneratorSet,
    SampledTarget,
    expr_error,
    expr_to_pl,
    sw_approximate,
    sw_construct,
    uniform_grid,
    unital_affine,
)
from .core import ELEMENTARY_LAWS, LAWS, LawReport, RieszSpace, check_laws, replay
from .duality import (
    FiniteSpace,
    SpaceMap,
    check_naturality,
    roundtrip_algebra,
    roundtrip_space,
    spectrum,
    yosida_transform,
)
from .errors import NotAUnitError, PreconditionError, RieszError, SpaceMismatchError, VerificationError
from .ideals import (
    FinHom,
    SpectrumPoint,
    SupportIdeal,
    enumerate_ideals,
    is_riesz_ideal,
    maximal_ideals,
    quotient,
    separating_hom,
)
from .rational import Rational, format_rational, to_rational
from .spaces import FinDimSpace, LexPlane, PLFunction, PLSpace, parse_space

__version__ = "0.1.0"


def __getattr__(name):
    # scikit-learn is slow to import; only load it when the estimator is asked for
    if name == "LatticeApproximator":
        from .estimator import LatticeApproximator

        return LatticeApproximator
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "ELEMENTARY_LAWS",
    "FinDimSpace",
    "FinHom",
    "FiniteSpace",
    "GeneratorSet",
    "LAWS",
    "LatticeApproximator",
    "LawReport",
    "LexPlane",
    "NotAUnitError",
    "PLFunction",
    "PLSpace",
    "PreconditionError",
    "Rational",
    "RieszError",
    "RieszSpace",
    "SampledTarget",
    "SpaceMap",
    "SpaceMismatchError",
    "SpectrumPoint",
    "SupportIdeal",
    "VerificationError",
    "check_laws",
    "check_naturality",
    "enumerate_ideals",
    "expr_error",
    "expr_to_pl",
    "format_rational",
    "is_riesz_ideal",
    "maximal_ideals",
    "parse_space",
    "quotient",
    "replay",
    "roundtrip_algebra",
    "roundtrip_space",
    "separating_hom",
    "spectrum",
    "sw_approximate",
    "sw_construct",
    "to_rational",
    "uniform_grid",
    "unital_affine",
    "yosida_transform",
]
