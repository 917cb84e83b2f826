"""Exact rational scalars.

The scalar type is GMP's ``mpq`` (through gmpy2): exact like
``fractions.Fraction``, hash- and equality-compatible with it, and roughly ten
times faster, which matters for the piecewise-linear law suites. This module
adds strict coercion (floats are refused, so binary rounding never leaks in),
the canonical ``"p/q"`` text form, and the seeded samplers used by the law
harnesses.
"""

from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

Rational = type(mpq())

ZERO = mpq(0)
ONE = mpq(1)


def to_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational without ever going through a float.

    Accepts mpq, Fraction, int and strings such as ``"3"`` or ``"-2/7"``.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, (Fraction, _RationalABC)):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        text = value.strip()
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError):
            q = None
        if q is None or any(c in text for c in ".eE_"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return mpq(q.numerator, q.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_rational(q) -> str:
    """Canonical text: ``"p"`` for integers, ``"p/q"`` otherwise, sign on p."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def random_rational(rng: random.Random, bound: int = 100, max_den: int = 10) -> Rational:
    """Draw p/q with |p| <= bound and 1 <= q <= max_den."""
    return mpq(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_positive(rng: random.Random, bound: int = 100, max_den: int = 10) -> Rational:
    return mpq(rng.randint(1, bound), rng.randint(1, max_den))
