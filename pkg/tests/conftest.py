import pytest

from rieszlab.rational import to_rational


def q(text):
    return to_rational(text)


def vec(*items):
    return tuple(to_rational(a) for a in items)


@pytest.fixture
def t2_grid():
    from rieszlab.approx import SampledTarget, uniform_grid, unital_affine

    points = uniform_grid(11)
    return unital_affine(points), SampledTarget.from_function(points, lambda t: t * t)


ACCEPTANCE: dict = {}


def record(criterion, passed, detail=""):
    """Remember one acceptance clause; the terminal summary prints one line per criterion."""
    ACCEPTANCE.setdefault(criterion, []).append((bool(passed), detail))
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        clauses = ACCEPTANCE[criterion]
        ok = all(p for p, _ in clauses)
        details = "; ".join(d for p, d in clauses if d and (not ok and not p or ok))
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {details}")
