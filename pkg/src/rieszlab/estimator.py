"""A scikit-learn style wrapper around the lattice approximation.

Only the approximation step has the fit/predict shape: it learns an
expression from sampled data and evaluates it at new points. Everything else
in the package is algebra on explicit objects and keeps its own interface.

Inputs stay exact. Points and targets must be rationals (``int``,
``Fraction``, ``mpq`` or ``"p/q"`` strings); floats are refused.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .approx import SampledTarget, expr_error, expr_to_pl, render, sw_construct, unital_affine, unital_affine_pl
from .errors import PreconditionError
from .rational import ONE, ZERO, to_rational
from .spaces import pl_eval


def check_points(X) -> tuple:
    """Flatten ``X`` (a sequence, or a one-column table) to distinct rationals in [0, 1]."""
    rows = list(X)
    if not rows:
        raise PreconditionError("no sample points")
    points = []
    for row in rows:
        if isinstance(row, (list, tuple)):
            if len(row) != 1:
                raise PreconditionError(f"expected one feature per sample, got {len(row)}")
            row = row[0]
        p = to_rational(row)
        if not ZERO <= p <= ONE:
            raise PreconditionError(f"sample point {p} outside [0, 1]")
        points.append(p)
    if len(set(points)) != len(points):
        raise PreconditionError("sample points must be distinct")
    return tuple(points)


def check_targets(y, n: int) -> tuple:
    values = tuple(to_rational(v) for v in y)
    if len(values) != n:
        raise PreconditionError(f"{n} sample points but {len(values)} target values")
    return values


class LatticeApproximator(BaseEstimator):
    """Fit a join/meet expression over ``{1, id}`` to samples on [0, 1].

    Parameters
    ----------
    eps : rational, default "1/10"
        Error budget on the sample points.
    minimize_cover : bool, default False
        Use greedy covering subfamilies instead of all of them.

    Attributes
    ----------
    expr_ : LatticeExpr
    generators_ : GeneratorSet
    construction_ : SWConstruction
    pl_ : PLFunction
        The expression as an exact function on all of [0, 1].
    train_error_ : Rational
    """

    def __init__(self, eps="1/10", minimize_cover=False):
        self.eps = eps
        self.minimize_cover = minimize_cover

    def fit(self, X, y):
        points = check_points(X)
        values = check_targets(y, len(points))
        self.generators_ = unital_affine(points)
        target = SampledTarget(dict(zip(points, values)))
        self.construction_ = sw_construct(
            target, self.generators_, self.eps, minimize_cover=self.minimize_cover
        )
        self.expr_ = self.construction_.expr
        self.pl_ = expr_to_pl(self.expr_, unital_affine_pl())
        self.train_error_ = expr_error(self.expr_, self.generators_, target)
        return self

    def predict(self, X) -> list:
        check_is_fitted(self, "pl_")
        return [pl_eval(self.pl_, p) for p in check_points(X)]

    def describe(self) -> str:
        check_is_fitted(self, "expr_")
        return render(self.expr_, self.generators_.names)


__all__ = ["LatticeApproximator", "check_points", "check_targets"]
