"""JSON framework documents ("format": "auxetica/1").

Example::

    {
      "format": "auxetica/1",
      "dimension": 3,
      "vertices": [["0", "0", "0"], ["1/6", "1/6", "1/6"]],
      "edges": [{"tail": 1, "head": 0, "shift": [1, 0, 0]}, ...],
      "gram": ["1", "1", "1", "0", "0", "0"]
    }

Numbers may be JSON integers, decimal strings, ``"p/q"`` strings or JSON
floats; all are read as exact rationals (floats through their decimal
repr). ``gram`` is either the six entries in the order 11, 22, 33, 23, 13,
12 or a full symmetric 3x3 array. For debugging the invariant code a
document may instead carry ``"pencil"`` (six linear forms) or ``"cubic"``
(ten coefficients).
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .cubic import MONOMIALS, TernaryCubic
from .deformation import GramVelocityPencil
from .framework import EdgeOrbit, PeriodicFramework, SymmetricMatrix3

FORMAT = "auxetica/1"


class DocumentError(ValueError):
    def __init__(self, location: str, message: str, source: str | None = None):
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{location}: {message}")
        self.location = location


def parse_number(value, location: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(location, "expected a number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(location, f"cannot parse {value!r} as a rational") from None
    raise DocumentError(location, f"expected a number, got {type(value).__name__}")


def format_number(value) -> str:
    if isinstance(value, (Fraction, int)):
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def _triple(value, location: str):
    if not isinstance(value, list) or len(value) != 3:
        raise DocumentError(location, "expected a list of three numbers")
    return tuple(parse_number(v, f"{location}[{i}]") for i, v in enumerate(value))


def _gram(value) -> SymmetricMatrix3:
    if isinstance(value, list) and len(value) == 6 and not isinstance(value[0], list):
        return SymmetricMatrix3(tuple(parse_number(v, f"gram[{i}]") for i, v in enumerate(value)))
    if isinstance(value, list) and len(value) == 3:
        rows = [_triple(r, f"gram[{i}]") for i, r in enumerate(value)]
        try:
            return SymmetricMatrix3.from_rows(rows)
        except ValueError as exc:
            raise DocumentError("gram", str(exc)) from None
    raise DocumentError("gram", "expected six entries or a 3x3 array")


def framework_from_dict(doc: dict) -> PeriodicFramework:
    if not isinstance(doc, dict):
        raise DocumentError("$", "top level must be an object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise DocumentError("format", f"unsupported format {fmt!r}, expected {FORMAT!r}")
    if doc.get("dimension", 3) != 3:
        raise DocumentError("dimension", "only dimension 3 is supported")
    for key in ("vertices", "edges", "gram"):
        if key not in doc:
            raise DocumentError(key, "missing field")
    if not isinstance(doc["vertices"], list) or not doc["vertices"]:
        raise DocumentError("vertices", "expected a non-empty list")
    vertices = tuple(_triple(v, f"vertices[{i}]") for i, v in enumerate(doc["vertices"]))
    if not isinstance(doc["edges"], list):
        raise DocumentError("edges", "expected a list")
    edges = []
    for i, e in enumerate(doc["edges"]):
        loc = f"edges[{i}]"
        if not isinstance(e, dict):
            raise DocumentError(loc, "expected an object with tail, head, shift")
        try:
            tail, head = e["tail"], e["head"]
        except KeyError as exc:
            raise DocumentError(loc, f"missing {exc.args[0]!r}") from None
        for name, idx in (("tail", tail), ("head", head)):
            if not isinstance(idx, int) or not 0 <= idx < len(vertices):
                raise DocumentError(f"{loc}.{name}", f"vertex index {idx!r} out of range")
        shift = e.get("shift", [0, 0, 0])
        if (not isinstance(shift, list) or len(shift) != 3
                or any(not isinstance(s, int) or isinstance(s, bool) for s in shift)):
            raise DocumentError(f"{loc}.shift", "expected three integers")
        try:
            edges.append(EdgeOrbit(tail, head, tuple(shift)))
        except ValueError as exc:
            raise DocumentError(loc, str(exc)) from None
    return PeriodicFramework(vertices, tuple(edges), _gram(doc["gram"]))


def framework_to_dict(fw: PeriodicFramework) -> dict:
    return {
        "format": FORMAT,
        "dimension": 3,
        "vertices": [[format_number(c) for c in v] for v in fw.vertices],
        "edges": [{"tail": e.tail, "head": e.head, "shift": list(e.shift)} for e in fw.edges],
        "gram": [format_number(c) for c in fw.gram.entries],
    }


def _load_json(path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg, str(path)) from None


def read_document(path):
    """Framework, pencil or cubic, depending on the document's keys."""
    doc = _load_json(path)
    try:
        if isinstance(doc, dict) and "pencil" in doc:
            forms = doc["pencil"]
            if not isinstance(forms, list) or len(forms) != 6:
                raise DocumentError("pencil", "expected six linear forms")
            return GramVelocityPencil.from_matrix_forms(
                [_triple(f, f"pencil[{i}]") for i, f in enumerate(forms)])
        if isinstance(doc, dict) and "cubic" in doc:
            coeffs = doc["cubic"]
            if not isinstance(coeffs, list) or len(coeffs) != 10:
                raise DocumentError("cubic", f"expected ten coefficients ordered {MONOMIALS}")
            return TernaryCubic(tuple(parse_number(c, f"cubic[{i}]") for i, c in enumerate(coeffs)))
        return framework_from_dict(doc)
    except DocumentError as exc:
        raise DocumentError(exc.location, str(exc).split(": ", 1)[-1], str(path)) from None


def read_framework(path) -> PeriodicFramework:
    obj = read_document(path)
    if not isinstance(obj, PeriodicFramework):
        raise DocumentError("$", "document does not describe a framework", str(path))
    return obj


def write_framework(fw: PeriodicFramework, path) -> None:
    Path(path).write_text(json.dumps(framework_to_dict(fw), indent=2) + "\n")
