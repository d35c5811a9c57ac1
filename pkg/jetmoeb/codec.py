"""
JSON forms of the kernel's types.

Exact scalars are written as strings ("3/2", "-1/4") when real and as
{"re": ..., "im": ...} otherwise, so no JSON reader ever rounds them. Float
scalars are plain numbers. The point at infinity is the string "inf".
"""

import json
import math
from typing import Any

from jetmoeb.branching import (
    BranchedJet,
    BranchingClass,
    Delta,
    DivisorClassData,
    DivisorDelta,
    Mode,
    OneFormDelta,
    QuadDiffDelta,
)
from jetmoeb.errors import JetError, MalformedInput
from jetmoeb.fuchs import ObstructionPoly, QuadDiffLaurent, RiccatiSolution
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import EXACT, Backend, ComplexExact, ComplexFloat
from jetmoeb.series import LaurentJet, PowerJet


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"Invalid JSON: {e}") from e


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _object(doc: Any) -> dict:
    if not isinstance(doc, dict):
        raise MalformedInput(f"Expected a JSON object, got {doc!r}")
    return doc


def _field(doc: Any, key: str, kind: type | tuple[type, ...] | None = None) -> Any:
    doc = _object(doc)
    if key not in doc:
        raise MalformedInput(f"Missing key {key!r}")
    value = doc[key]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise MalformedInput(f"Key {key!r} has the wrong type: {value!r}")
    return value


def _natural(doc: Any, key: str) -> int:
    value = _field(doc, key, int)
    if value < 0:
        raise MalformedInput(f"Key {key!r} must be a natural number, got {value}")
    return value


# scalars


def encode_scalar(x: Any) -> Any:
    if isinstance(x, ComplexExact):
        if x.is_real():
            return str(x.re)
        return {"re": str(x.re), "im": str(x.im)}
    if isinstance(x, ComplexFloat):
        if x.im == 0:
            return x.re
        return {"re": x.re, "im": x.im}
    return str(x)


def decode_scalar(raw: Any, backend: Backend = EXACT):
    try:
        if isinstance(raw, bool):
            raise MalformedInput(f"Not a scalar: {raw!r}")
        if isinstance(raw, dict):
            re = decode_scalar(raw.get("re", "0"), backend)
            im = decode_scalar(raw.get("im", "0"), backend)
            return re + im * backend.scalar(ComplexExact(0, 1))
        if isinstance(raw, float):
            if backend.name == "exact":
                raise MalformedInput(
                    f"Float literal {raw!r} is not exact; pass it as a string"
                )
            if not math.isfinite(raw):
                raise MalformedInput(f"Float literal {raw!r} is not finite")
            return backend.scalar(raw)
        if isinstance(raw, (str, int)):
            return backend.scalar(raw)
    except (ValueError, ZeroDivisionError, TypeError, OverflowError) as e:
        if isinstance(e, JetError):
            raise
        raise MalformedInput(f"Not a scalar: {raw!r}") from e
    raise MalformedInput(f"Not a scalar: {raw!r}")


def decode_scalars(raw: Any, backend: Backend = EXACT) -> list:
    if not isinstance(raw, list):
        raise MalformedInput(f"Expected a list of scalars, got {raw!r}")
    return [decode_scalar(x, backend) for x in raw]


def encode_point(p: PointCP1) -> Any:
    return "inf" if p.z is None else encode_scalar(p.z)


def decode_point(raw: Any, backend: Backend = EXACT) -> PointCP1:
    if raw == "inf":
        return INFINITY
    return PointCP1(decode_scalar(raw, backend))


# jets


def encode_jet(j: PowerJet | LaurentJet) -> dict:
    pole = j.pole if isinstance(j, LaurentJet) else 0
    return {
        "pole": pole,
        "order": j.order,
        "coeffs": [encode_scalar(c) for c in j.coeffs],
    }


def _check_order(raw: dict, coeffs: list, pole: int) -> None:
    """An explicit "order" must match the coefficients it describes."""
    if "order" not in raw:
        return
    order = _natural(raw, "order")
    expected = len(coeffs) - pole - 1
    if order != expected:
        raise MalformedInput(
            f"Key 'order' is {order}, but {len(coeffs)} coefficients with pole "
            f"{pole} give order {expected}"
        )


def decode_laurent(raw: Any, backend: Backend = EXACT) -> LaurentJet:
    if isinstance(raw, list):
        return LaurentJet(decode_scalars(raw, backend))
    pole = _natural(raw, "pole") if "pole" in _object(raw) else 0
    coeffs = decode_scalars(_field(raw, "coeffs", list), backend)
    if len(coeffs) < pole + 1:
        raise MalformedInput(f"{len(coeffs)} coefficients cannot carry pole {pole}")
    _check_order(raw, coeffs, pole)
    return LaurentJet(coeffs, pole)


def decode_powerjet(raw: Any, backend: Backend = EXACT) -> PowerJet:
    """A coefficient list, or a jet object without a pole."""
    if isinstance(raw, list):
        coeffs = decode_scalars(raw, backend)
    else:
        if "pole" in _object(raw) and _natural(raw, "pole"):
            raise MalformedInput("Expected a power jet, got a pole")
        coeffs = decode_scalars(_field(raw, "coeffs", list), backend)
        _check_order(raw, coeffs, 0)
    if not coeffs:
        raise MalformedInput("A power jet needs at least one coefficient")
    return PowerJet(coeffs)


# moebius


def encode_moebius(g: Moebius) -> dict:
    return {k: encode_scalar(v) for k, v in zip("abcd", g.entries())}


def decode_moebius(raw: Any, backend: Backend = EXACT) -> Moebius:
    return Moebius(*(decode_scalar(_field(raw, k), backend) for k in "abcd"))


# branching


def encode_branched(j: BranchedJet) -> dict:
    return {
        "n": j.n,
        "value": encode_point(j.value),
        "a": [encode_scalar(x) for x in j.a],
    }


def decode_branched(raw: Any, backend: Backend = EXACT) -> BranchedJet:
    n = _natural(raw, "n")
    value = decode_point(_field(raw, "value"), backend)
    a = decode_scalars(_field(raw, "a", list), backend)
    return BranchedJet(n, value, tuple(a))


def encode_class(c: BranchingClass) -> dict:
    return {"n": c.n, "c": [encode_scalar(x) for x in c.c]}


def decode_class(raw: Any, backend: Backend = EXACT) -> BranchingClass:
    n = _natural(raw, "n")
    key = "c" if "c" in _object(raw) else "class"
    return BranchingClass(n, tuple(decode_scalars(_field(raw, key, list), backend)))


def _delta_key(mode: Mode) -> str:
    return "eta" if mode == "preschwarzian" else "beta"


def encode_delta(d: Delta) -> dict:
    return {"n": d.n, _delta_key(d.mode): [encode_scalar(x) for x in d.values]}


def decode_delta(raw: Any, backend: Backend = EXACT) -> Delta:
    n = _natural(raw, "n")
    raw = _object(raw)
    if "eta" in raw:
        return OneFormDelta(n, tuple(decode_scalars(raw["eta"], backend)))
    if "beta" in raw:
        return QuadDiffDelta(n, tuple(decode_scalars(raw["beta"], backend)))
    raise MalformedInput("A delta needs an 'eta' or a 'beta' list")


def _points(raw: Any) -> list:
    points = _field(raw, "points", list)
    for p in points:
        _field(p, "label", str)
    return points


def encode_divisor(a: DivisorClassData) -> dict:
    return {
        "points": [
            {"label": label, "n": c.n, "class": [encode_scalar(x) for x in c.c]}
            for label, c in a.points
        ]
    }


def decode_divisor(raw: Any, backend: Backend = EXACT) -> DivisorClassData:
    return DivisorClassData(
        tuple((p["label"], decode_class(p, backend)) for p in _points(raw))
    )


def encode_divisor_delta(d: DivisorDelta) -> dict:
    return {
        "points": [{"label": label, **encode_delta(delta)} for label, delta in d.points]
    }


def decode_divisor_delta(raw: Any, backend: Backend = EXACT) -> DivisorDelta:
    return DivisorDelta(
        tuple((p["label"], decode_delta(p, backend)) for p in _points(raw))
    )


# fuchs


def encode_quaddiff(phi: QuadDiffLaurent) -> dict:
    return {"n": phi.n, "alpha": [encode_scalar(x) for x in phi.alpha]}


def decode_quaddiff(
    raw: Any, backend: Backend = EXACT, n: int | None = None
) -> QuadDiffLaurent:
    """
    Args:
        raw: {"n": ..., "alpha": [alpha_{-2}, alpha_{-1}, ...]}
        backend: Coefficient field
        n: Branch order overriding the document's
    """
    if n is None:
        n = _natural(raw, "n")
    alpha = decode_scalars(_field(raw, "alpha", list), backend)
    return QuadDiffLaurent(n, tuple(alpha))


def encode_solution(sol: RiccatiSolution) -> dict:
    return {
        "n": sol.n,
        "delta": [encode_scalar(x) for x in sol.delta],
        "free_param": encode_scalar(sol.free_param),
    }


def encode_obstruction(p: ObstructionPoly) -> dict:
    return {
        "n": p.n,
        "vars": p.variables,
        "polynomial": str(p),
        "monomials": [
            {"exps": list(exps), "coeff": str(coeff)} for exps, coeff in p.monomials()
        ],
    }

