import random

import pytest
from hypothesis import given, settings, strategies as st

from rieszlab.core import ELEMENTARY_LAWS, LAWS, LAWS_BY_NAME, check_laws, evaluate_law, replay
from rieszlab.errors import NotAUnitError, PreconditionError
from rieszlab.spaces import FinDimSpace, LexPlane, PLFunction, PLSpace

from conftest import q, vec

R2, R3, LEX = FinDimSpace(2), FinDimSpace(3), LexPlane()


def test_law_catalogue():
    assert len(LAWS) == 22
    assert len(ELEMENTARY_LAWS) == 15
    assert [law.name for law in LAWS if law.archimedean_only] == ["norm-dominates", "norm-definite"]


@pytest.mark.parametrize("space, x, y, expected", [
    (R2, vec(1, 2), vec(2, 2), True),
    (LEX, vec(0, 5), vec(1, 0), True),
    (R2, vec(1, 0), vec(0, 1), False),
    (R2, vec(0, 1), vec(1, 0), False),
    (LEX, vec(3, 3), vec(3, 3), True),
])
def test_leq(space, x, y, expected):
    assert space.leq(x, y) is expected


def test_abs_and_parts():
    assert R2.abs(vec(3, -4)) == vec(3, 4)
    assert LEX.abs(vec(-1, 7)) == vec(1, -7)
    assert (R2.pos(vec(3, -4)), R2.neg_part(vec(3, -4))) == (vec(3, 0), vec(0, 4))
    assert (LEX.pos(vec(-1, 7)), LEX.neg_part(vec(-1, 7))) == (vec(0, 0), vec(1, -7))
    x = vec(2, 5)
    assert (R2.pos(x), R2.neg_part(x)) == (x, R2.zero())


def test_orthogonality():
    assert R2.is_orthogonal(vec(1, 0), vec(0, 5))
    assert not R2.is_orthogonal(vec(1, 1), vec(0, 1))
    x = vec("-3/2", 4, 0)
    assert R3.is_orthogonal(R3.pos(x), R3.neg_part(x))


def test_riesz_decompose_examples():
    assert R2.riesz_decompose(vec(1, 2), vec(2, 0), vec(0, 3)) == (vec(1, 0), vec(0, 2))
    a, b = vec(2, 1), vec(5, 5)
    assert R2.riesz_decompose(a, a, b) == (a, R2.zero())
    assert R2.riesz_decompose(R2.zero(), a, b) == (R2.zero(), R2.zero())


@pytest.mark.parametrize("x, a, b", [
    (vec(-1, 0), vec(1, 1), vec(1, 1)),
    (vec(3, 0), vec(1, 0), vec(1, 0)),
    (vec(0, 0), vec(-1, 0), vec(1, 0)),
])
def test_riesz_decompose_rejects_bad_triples(x, a, b):
    with pytest.raises(PreconditionError):
        R2.riesz_decompose(x, a, b)


def test_unit_norm_examples():
    assert R3.unit_norm(vec(1, -2, "1/2"), vec(1, 1, 1)) == 2
    assert R3.unit_norm(R3.zero(), R3.unit) == 0
    witness = vec(0, 1)
    assert LEX.unit_norm(witness, vec(1, 0)) == 0 and witness != LEX.zero()
    with pytest.raises(NotAUnitError):
        R3.unit_norm(vec(1, 1, 1), vec(1, 0, 1))


def test_units():
    assert R3.is_unit(vec(1, 1, 1))
    assert not R3.is_unit(vec(1, 0, 1))
    assert LEX.is_unit(vec(1, -5))
    assert not LEX.is_unit(vec(0, 5))


def test_infinitesimals():
    inf = LEX.find_infinitesimal()
    assert (inf.eps, inf.bound) == (vec(0, 1), vec(1, 0))
    assert inf.spot_check(LEX, range(-1000, 1001, 7))
    assert R3.find_infinitesimal() is None
    assert PLSpace().find_infinitesimal() is None


@pytest.mark.parametrize("space", [R3, LEX, PLSpace()], ids=["fin3", "lex", "pl"])
def test_all_laws_hold(space):
    reports = check_laws(space, case_count=300, seed=42)
    assert [r.law for r in reports] == [law.name for law in LAWS]
    failed = [(r.law, r.counterexample) for r in reports if not r.passed]
    assert not failed
    skipped = {r.law for r in reports if r.cases == 0}
    assert skipped == (set() if space.archimedean else {"norm-dominates", "norm-definite"})


def test_seeded_runs_are_reproducible():
    a = check_laws(PLSpace(), 50, seed=3, laws=["distributive"])
    b = check_laws(PLSpace(), 50, seed=3, laws=["distributive", "abs-zero"])
    assert a[0] == b[0]


class SwappedMeet(FinDimSpace):
    """Meet that returns the coordinates of the wrong argument in slot 0."""

    def meet(self, x, y):
        m = list(super().meet(x, y))
        m[0] = max(x[0], y[0])
        return tuple(m)


def test_corrupted_meet_is_caught():
    broken = SwappedMeet(2)
    report = check_laws(broken, 200, seed=1, laws=["join-plus-meet"])[0]
    assert not report.passed
    x, y = report.counterexample.inputs
    assert report.counterexample.lhs != report.counterexample.rhs
    assert x[0] != y[0]
    assert not replay(broken, report)
    # the same inputs are fine on the real space
    assert replay(FinDimSpace(2), report)


def test_evaluate_law_by_name():
    holds, lhs, rhs = evaluate_law(R2, "join-plus-meet", (vec(1, 5), vec(2, 3)))
    assert holds and lhs == rhs == vec(3, 8)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
vectors = st.tuples(rationals, rationals, rationals).map(lambda t: vec(*t))


@settings(max_examples=200)
@given(vectors, vectors, vectors)
def test_distributive_and_modular_hypothesis(x, y, a):
    for name in ("distributive", "translate-join"):
        assert evaluate_law(R3, name, (x, y, a))[0]
    assert evaluate_law(R3, "join-plus-meet", (x, y))[0]


@settings(max_examples=200)
@given(vectors, vectors)
def test_decomposition_postconditions_hypothesis(a, b):
    a, b = R3.abs(a), R3.abs(b)
    x = R3.meet(R3.add(a, b), R3.abs(R3.sub(a, b)))
    a1, b1 = R3.riesz_decompose(x, a, b)
    zero = R3.zero()
    assert R3.add(a1, b1) == x
    assert R3.leq(zero, a1) and R3.leq(a1, a)
    assert R3.leq(zero, b1) and R3.leq(b1, b)


def test_law_names_unique():
    assert len(LAWS_BY_NAME) == len(LAWS)
