"""Command-line front end.

Exit codes: 0 success, 2 usage error (bad flags, malformed JSON or space
descriptor), 3 a law or verification check failed, 4 a precondition of the
requested operation does not hold. ``RIESZ_SEED`` in the environment takes
precedence over ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import serialization as ser
from .approx import (
    expr_error,
    expr_size,
    expr_to_pl,
    render,
    sw_construct,
    uniform_grid,
    unital_affine,
    unital_affine_pl,
)
from .core import LAWS, LawReport, check_laws
from .duality import (
    check_naturality,
    labelled_space,
    random_space_map,
    random_unit_preserving_hom,
    roundtrip_algebra,
    roundtrip_space,
    spectrum,
    spectrum_space,
)
from .errors import PreconditionError, RieszError, VerificationError
from .ideals import enumerate_ideals, is_riesz_ideal, maximal_ideals, quotient
from .spaces import FinDimSpace, PLFunction, PLSpace, parse_space, pl_add, pl_scale, pl_unit_norm

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_PRECONDITION = 0, 2, 3, 4
IDEAL_ENUMERATION_LIMIT = 6
NATURALITY_MORPHISMS = 20


class UsageError(Exception):
    pass


def _space(text: str):
    try:
        return parse_space(text)
    except (RieszError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON {text!r}: {exc.msg}") from None


def _json_file(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc.msg}") from None


def _fin(space, command: str) -> FinDimSpace:
    if not isinstance(space, FinDimSpace):
        raise PreconditionError(f"{command} needs a space fin:n, got {space.descriptor}")
    return space


def _unit(space, text: str | None):
    if text is None or text == "default":
        return space.unit
    if text == "ones":
        if not isinstance(space, FinDimSpace):
            raise PreconditionError("'ones' is only meaningful for fin:n")
        return FinDimSpace(space.n).unit
    u = ser.decode_element(space, _json_arg(text))
    if not space.is_unit(u):
        raise PreconditionError(f"{text} is not a unit of {space.descriptor}")
    return u


def _seed(args) -> int:
    env = os.environ.get("RIESZ_SEED")
    if env is None:
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"RIESZ_SEED must be an integer, got {env!r}") from None


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.format == "json":
        print(ser.dumps(payload))
    else:
        print("\n".join(human))


def _show(x) -> str:
    return json.dumps(ser.to_jsonable(x), ensure_ascii=False)


def _report_line(r: LawReport, label: str = "") -> str:
    name = r.law + (f" [{label}]" if label else "")
    if r.note and r.cases == 0:
        return f"SKIP {name}: {r.note}"
    if r.passed:
        return f"PASS {name} ({r.cases} cases)"
    c = r.counterexample
    why = f" ({r.note})" if r.note else ""
    return f"FAIL {name}{why}: inputs {_show(c.inputs)}, lhs {_show(c.lhs)}, rhs {_show(c.rhs)}"


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    space, seed, cases = args.space, _seed(args), args.cases
    reports: list[tuple[LawReport, str]] = [(r, "") for r in check_laws(space, cases, seed)]
    notes = []

    witness = space.find_infinitesimal()
    if witness is not None:
        notes.append(f"non-Archimedean: witness {_tuple_text(witness.eps)}")

    if isinstance(space, FinDimSpace):
        n = space.n
        ideals = enumerate_ideals(n) if n <= IDEAL_ENUMERATION_LIMIT else maximal_ideals(n)
        for D in ideals:
            reports.append((is_riesz_ideal(D, samples=min(cases, 500), seed=seed), _zs(D)))
        for D in maximal_ideals(n):
            if quotient(n, space.unit, D).q.m != 1:
                raise VerificationError(f"quotient by {D} is not one-dimensional")
        roundtrip_algebra(space.unit, cases=min(cases, 200), seed=seed)
        rng = random.Random(f"{seed}:verify-naturality")
        for _ in range(NATURALITY_MORPHISMS):
            h, _ = random_unit_preserving_hom(rng, n, rng.randint(1, n + 1), space.unit)
            reports.append((check_naturality(h, space.unit, samples=min(cases, 50), seed=seed),
                            f"R^{h.n}->R^{h.m}"))
        notes.append("CΦ≅id: ok")

    failed = [r for r, _ in reports if not r.passed]
    payload = {
        "space": space.descriptor,
        "seed": seed,
        "cases": cases,
        "reports": [dict(ser.encode_report(r), **({"label": lbl} if lbl else {})) for r, lbl in reports],
        "notes": notes,
        "passed": not failed,
    }
    human = [f"space {space.descriptor}, seed {seed}, {cases} cases per law"]
    human += [_report_line(r, lbl) for r, lbl in reports]
    human += notes
    human.append("result: ok" if not failed else f"result: {len(failed)} check(s) failed")
    _emit(args, payload, human)
    return EXIT_FAILED if failed else EXIT_OK


def _tuple_text(x) -> str:
    return "(" + ",".join(ser.encode_rational(c) for c in x) + ")"


def _zs(D) -> str:
    return "zero_set={" + ",".join(str(i) for i in sorted(D.zero_set)) + "}"


def cmd_decompose(args) -> int:
    space = args.space
    x, a, b = (ser.decode_element(space, _json_arg(t)) for t in (args.x, args.a, args.b))
    a_part, b_part = space.riesz_decompose(x, a, b)
    payload = {"a_prime": ser.encode_element(a_part), "b_prime": ser.encode_element(b_part)}
    human = [f"a' = {_show(a_part)}", f"b' = {_show(b_part)}"]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_norm(args) -> int:
    space = args.space
    x = ser.decode_element(space, _json_arg(args.x))
    u = _unit(space, args.unit)
    value = space.unit_norm(x, u)
    payload = {"norm": ser.encode_rational(value), "unit": ser.encode_element(u)}
    _emit(args, payload, [f"‖x‖_u = {ser.encode_rational(value)}"])
    return EXIT_OK


def cmd_spectrum(args) -> int:
    space = _fin(args.space, "spectrum")
    u = _unit(space, args.unit)
    points = spectrum(u)
    labels = spectrum_space(u).points
    coeffs = [ser.encode_rational(p.coeff) for p in points]
    payload = {
        "unit": ser.encode_element(u),
        "points": [dict(label=lbl, **ser.encode_spectrum_point(p)) for lbl, p in zip(labels, points)],
        "coefficients": coeffs,
    }
    human = [f"{lbl}: x ↦ {ser.encode_rational(p.coeff)}·x[{p.index}]" for lbl, p in zip(labels, points)]
    human.append("coefficients: " + json.dumps(coeffs))
    _emit(args, payload, human)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    space = _fin(args.space, "roundtrip")
    n, seed = space.n, _seed(args)
    u = _unit(space, args.unit)
    roundtrip_algebra(u, cases=args.cases, seed=seed)
    roundtrip_space(labelled_space(n))
    rng = random.Random(f"{seed}:roundtrip-naturality")
    reports = []
    for _ in range(NATURALITY_MORPHISMS):
        h, _ = random_unit_preserving_hom(rng, n, rng.randint(1, n + 1), u)
        reports.append(check_naturality(h, u, samples=min(args.cases, 50), seed=seed))
        X, Y = labelled_space(n, "x"), labelled_space(rng.randint(1, n + 1), "y")
        reports.append(check_naturality(random_space_map(rng, X, Y)))
    failed = [r for r in reports if not r.passed]
    status = "ok" if not failed else "FAILED"
    payload = {
        "space": space.descriptor,
        "unit": ser.encode_element(u),
        "seed": seed,
        "algebra_roundtrip": "ok",
        "space_roundtrip": "ok",
        "naturality": {"checked": len(reports), "status": status},
        "failures": [ser.encode_report(r) for r in failed],
    }
    human = ["CΦ≅id: ok, ΦC≅id: ok", f"naturality: {status} ({len(reports)} morphisms)"]
    human += [_report_line(r) for r in failed]
    _emit(args, payload, human)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_approx(args) -> int:
    if args.gens == "unital-affine":
        points = uniform_grid(args.grid)
        D = unital_affine(points)
    else:
        D = ser.decode_generators(_json_file(args.gens))
        points = D.points
    raw = _json_file(args.target)
    g = ser.decode_target(raw, points)
    construction = sw_construct(g, D, ser.decode_rational(args.eps), minimize_cover=args.minimize_cover)
    expr = construction.expr
    error = expr_error(expr, D, g)
    payload = {
        "eps": ser.encode_rational(construction.eps),
        "points": len(points),
        "grid_error": ser.encode_rational(error),
        "size": expr_size(expr),
    }
    human = [
        f"grid error: {ser.encode_rational(error)} (ε = {ser.encode_rational(construction.eps)})",
        f"expression size: {expr_size(expr)}",
    ]
    if args.gens == "unital-affine" and isinstance(raw, dict) and "t" in raw:
        # exact error on all of [0, 1], only available for piecewise-linear targets
        target = ser.decode_pl(raw)
        gap = pl_add(expr_to_pl(expr, unital_affine_pl()), pl_scale(-1, target))
        continuum = pl_unit_norm(gap, PLFunction.constant(1))
        payload["continuum_error"] = ser.encode_rational(continuum)
        human.append(f"error on [0, 1]: {ser.encode_rational(continuum)}")
    if args.out:
        Path(args.out).write_text(ser.dumps(ser.encode_expr(expr)) + "\n", encoding="utf-8")
        payload["out"] = args.out
        human.append(f"expression written to {args.out}")
    else:
        payload["expr"] = ser.encode_expr(expr)
        human.append(render(expr, D.names))
    _emit(args, payload, human)
    return EXIT_OK


def cmd_laws_list(args) -> int:
    rows = [
        {"name": law.name, "formula": law.formula, "tags": list(law.tags),
         "archimedean_only": law.archimedean_only}
        for law in LAWS
    ]
    width = max(len(law.name) for law in LAWS)
    human = [
        f"{law.name:<{width}}  {law.formula}" + ("  (Archimedean only)" if law.archimedean_only else "")
        for law in LAWS
    ]
    _emit(args, {"laws": rows}, human)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=int, default=0, help="overridden by RIESZ_SEED")

    parser = argparse.ArgumentParser(prog="rieszlab", description="Exact Riesz space computations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("verify", parents=[common], help="run the law suite on a space")
    p.add_argument("--space", type=_space, required=True, help="fin:n, lex or pl")
    p.add_argument("--cases", type=_positive, default=1000)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="Riesz decomposition of 0 <= x <= a + b")
    p.add_argument("--space", type=_space, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("norm", parents=[common], help="unit norm of an element")
    p.add_argument("--space", type=_space, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--unit", help="JSON element, 'ones' or 'default'")
    p.set_defaults(run=cmd_norm)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of (R^n, u)")
    p.add_argument("--space", type=_space, required=True)
    p.add_argument("--unit", help="JSON array, 'ones' or 'default'")
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("roundtrip", parents=[common], help="verify both duality round trips")
    p.add_argument("--space", type=_space, required=True)
    p.add_argument("--unit", help="JSON array, 'ones' or 'default'")
    p.add_argument("--cases", type=_positive, default=200)
    p.set_defaults(run=cmd_roundtrip)

    p = sub.add_parser("approx", parents=[common], help="lattice approximation of sampled data")
    p.add_argument("--grid", type=_positive, default=11, help="uniform grid size on [0, 1]")
    p.add_argument("--target", required=True, help="JSON file with the target")
    p.add_argument("--gens", default="unital-affine", help="'unital-affine' or a JSON generator file")
    p.add_argument("--eps", default="1/10")
    p.add_argument("--minimize-cover", action="store_true")
    p.add_argument("--out", help="write the expression JSON here")
    p.set_defaults(run=cmd_approx)

    p = sub.add_parser("laws-list", parents=[common], help="list the checked laws")
    p.set_defaults(run=cmd_laws_list)
    return parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"rieszlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"rieszlab: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (RieszError, ValueError, TypeError, KeyError) as exc:
        print(f"rieszlab: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
