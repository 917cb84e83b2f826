"""JSON encodings for every value type.

Rationals are always strings (``"3"``, ``"-2/7"``) so no binary float ever
enters or leaves. Dict key order is fixed by construction, which keeps output
byte-identical between runs.
"""

from __future__ import annotations

import json
from typing import Any

from .approx import Add, Const, Gen, GeneratorSet, Join, LatticeExpr, Meet, SampledTarget, Scale
from .core import LawReport, RieszSpace
from .duality import FiniteSpace, SpaceMap
from .errors import PreconditionError
from .ideals import FinHom, SpectrumPoint, SupportIdeal
from .rational import Rational, format_rational, to_rational
from .spaces import LexPlane, PLFunction, PLSpace


def encode_rational(q) -> str:
    return format_rational(q)


def decode_rational(obj) -> Rational:
    if isinstance(obj, float):
        raise PreconditionError(f"floats are not accepted, write {obj!r} as a string \"p/q\"")
    return to_rational(obj)


def encode_pl(f: PLFunction) -> dict:
    return {"t": [encode_rational(a) for a in f.t], "v": [encode_rational(a) for a in f.v]}


def decode_pl(obj) -> PLFunction:
    if not isinstance(obj, dict) or "t" not in obj or "v" not in obj:
        raise PreconditionError('a piecewise-linear function is {"t": [...], "v": [...]}')
    return PLFunction([decode_rational(a) for a in obj["t"]], [decode_rational(a) for a in obj["v"]])


def encode_element(x) -> Any:
    if isinstance(x, PLFunction):
        return encode_pl(x)
    return [encode_rational(a) for a in x]


def decode_element(space: RieszSpace, obj) -> Any:
    if isinstance(space, PLSpace):
        return decode_pl(obj)
    if not isinstance(obj, list):
        raise PreconditionError(f"expected a JSON array for an element of {space.descriptor}")
    return space.element([decode_rational(a) for a in obj])


def encode_ideal(D: SupportIdeal) -> dict:
    return {"n": D.n, "zero_set": sorted(D.zero_set)}


def decode_ideal(obj) -> SupportIdeal:
    return SupportIdeal(int(obj["n"]), frozenset(int(i) for i in obj["zero_set"]))


def encode_finite_space(X: FiniteSpace) -> dict:
    return {"points": list(X.points)}


def decode_finite_space(obj) -> FiniteSpace:
    return FiniteSpace(tuple(obj["points"]))


def encode_space_map(f: SpaceMap) -> dict:
    return {
        "source": list(f.source.points),
        "target": list(f.target.points),
        "map": {p: f(p) for p in f.source.points},
    }


def decode_space_map(obj) -> SpaceMap:
    table = {str(k): str(v) for k, v in obj["map"].items()}
    source = FiniteSpace(tuple(obj.get("source", table)))
    target = FiniteSpace(tuple(obj.get("target", sorted(set(table.values())))))
    return SpaceMap(source, target, table)


def encode_hom(h: FinHom) -> dict:
    return {"n": h.n, "assign": [{"from": i, "coeff": encode_rational(c)} for i, c in h.assign]}


def decode_hom(obj) -> FinHom:
    assign = tuple((int(a["from"]), decode_rational(a["coeff"])) for a in obj["assign"])
    n = int(obj["n"]) if "n" in obj else max((i for i, _ in assign), default=-1) + 1
    return FinHom(n, assign)


def encode_spectrum_point(p: SpectrumPoint) -> dict:
    return {"index": p.index, "coeff": encode_rational(p.coeff)}


def decode_spectrum_point(obj) -> SpectrumPoint:
    return SpectrumPoint(int(obj["index"]), decode_rational(obj["coeff"]))


def encode_expr(e: LatticeExpr) -> dict:
    if isinstance(e, Gen):
        return {"op": "gen", "index": e.index}
    if isinstance(e, Const):
        return {"op": "const", "value": encode_rational(e.value)}
    if isinstance(e, Add):
        return {"op": "add", "left": encode_expr(e.left), "right": encode_expr(e.right)}
    if isinstance(e, Scale):
        return {"op": "scale", "factor": encode_rational(e.factor), "child": encode_expr(e.child)}
    op = "join" if isinstance(e, Join) else "meet"
    return {"op": op, "children": [encode_expr(c) for c in e.children]}


def decode_expr(obj) -> LatticeExpr:
    op = obj.get("op")
    if op == "gen":
        return Gen(int(obj["index"]))
    if op == "const":
        return Const(decode_rational(obj["value"]))
    if op == "add":
        return Add(decode_expr(obj["left"]), decode_expr(obj["right"]))
    if op == "scale":
        return Scale(decode_rational(obj["factor"]), decode_expr(obj["child"]))
    if op == "join":
        return Join(tuple(decode_expr(c) for c in obj["children"]))
    if op == "meet":
        return Meet(tuple(decode_expr(c) for c in obj["children"]))
    raise PreconditionError(f"unknown expression node {op!r}")


def encode_point(p) -> str:
    return p if isinstance(p, str) else encode_rational(p)


def decode_point(key: str):
    """Point labels that read as rationals become rationals (grid points)."""
    try:
        return to_rational(key)
    except (ValueError, TypeError):
        return key


def encode_generators(D: GeneratorSet) -> dict:
    return {
        "names": list(D.names),
        "values": {encode_point(p): [encode_rational(v) for v in row] for p, row in D.values.items()},
    }


def decode_generators(obj) -> GeneratorSet:
    return GeneratorSet(
        tuple(obj["names"]),
        {decode_point(k): tuple(decode_rational(v) for v in row) for k, row in obj["values"].items()},
    )


def encode_target(g: SampledTarget) -> dict:
    return {"values": {encode_point(p): encode_rational(v) for p, v in g.values.items()}}


def decode_target(obj, points=None) -> SampledTarget:
    """Read a target as ``{"values": {point: value}}``, ``{"values": [..]}``
    aligned with ``points``, or a PL function sampled at ``points``."""
    if isinstance(obj, dict) and "t" in obj and "v" in obj:
        if points is None:
            raise PreconditionError("sampling a piecewise-linear target needs a grid")
        f = decode_pl(obj)
        return SampledTarget({p: f(p) for p in points})
    values = obj["values"] if isinstance(obj, dict) else obj
    if isinstance(values, list):
        if points is None or len(values) != len(points):
            raise PreconditionError("a list of target values must match the grid length")
        return SampledTarget({p: decode_rational(v) for p, v in zip(points, values)})
    return SampledTarget({decode_point(k): decode_rational(v) for k, v in values.items()})


def to_jsonable(obj) -> Any:
    """Best-effort encoding of report payloads (counterexample inputs and sides)."""
    if isinstance(obj, Rational) or (hasattr(obj, "numerator") and not isinstance(obj, (bool, int))):
        return encode_rational(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, PLFunction):
        return encode_pl(obj)
    if isinstance(obj, SpectrumPoint):
        return encode_spectrum_point(obj)
    if isinstance(obj, (tuple, list)):
        return [to_jsonable(a) for a in obj]
    return str(obj)


def encode_report(r: LawReport) -> dict:
    out = {"law": r.law, "formula": r.formula, "cases": r.cases, "passed": r.passed}
    if r.note:
        out["note"] = r.note
    if r.counterexample is not None:
        out["counterexample"] = {
            "inputs": to_jsonable(r.counterexample.inputs),
            "lhs": to_jsonable(r.counterexample.lhs),
            "rhs": to_jsonable(r.counterexample.rhs),
        }
    return out


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


__all__ = [name for name in dir() if name.startswith(("encode_", "decode_"))] + ["dumps", "to_jsonable"]
