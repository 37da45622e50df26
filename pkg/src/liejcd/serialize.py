"""JSON documents for matrices, algebras, elements and certificates.

Every number is written as a string (``"3/4"``, ``"-2"``) so nothing ever
passes through a binary float.  On input, JSON integers are accepted too.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import LieAlgebra, from_matrices, lie_closure
from .errors import ValidationError
from .linalg import QMatrix, Subspace, format_rational, rational, vector


def _number(x: Any):
    if isinstance(x, float):
        raise ValidationError(f"floating-point number {x!r} not allowed; use a string like \"3/4\"")
    return rational(x)


def parse_vector(data: Any) -> tuple:
    if not isinstance(data, list):
        raise ValidationError("expected a JSON array of numbers")
    return tuple(_number(x) for x in data)


def parse_matrix(data: Any) -> QMatrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValidationError("expected a JSON array of arrays")
    return QMatrix([[_number(x) for x in row] for row in data])


def dump_vector(v) -> list[str]:
    return [format_rational(x) for x in v]


def dump_matrix(m: QMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m]


def dump_subspace(s: Subspace) -> list[list[str]]:
    return [dump_vector(b) for b in s.basis]


def parse_algebra(doc: dict, auto_close: bool = False) -> LieAlgebra:
    """Algebra from ``{"mode": "matrix", ...}`` or ``{"mode": "structure", ...}``."""
    if not isinstance(doc, dict):
        raise ValidationError("algebra document must be a JSON object")
    mode = doc.get("mode")
    if mode == "matrix":
        mats = [parse_matrix(m) for m in doc.get("basis", [])]
        n = doc.get("n")
        if n is not None and any(m.shape != (n, n) for m in mats):
            raise ValidationError(f"basis matrices must all be {n}x{n}")
        if auto_close:
            mats = lie_closure(mats)
        return from_matrices(mats)
    if mode == "structure":
        dim = doc.get("dim")
        if not isinstance(dim, int) or dim < 0:
            raise ValidationError("structure mode needs an integer 'dim'")
        brackets = []
        for entry in doc.get("brackets", []):
            if not (isinstance(entry, list) and len(entry) == 3):
                raise ValidationError("each bracket entry must be [i, j, [coords]]")
            i, j, coords = entry
            brackets.append((int(i), int(j), parse_vector(coords)))
        return LieAlgebra.from_brackets(dim, brackets)
    raise ValidationError(f"unknown algebra mode {mode!r}")


def dump_algebra(g: LieAlgebra) -> dict:
    if g.is_matrix_mode:
        return {"mode": "matrix", "n": g.ambient_dim, "basis": [dump_matrix(m) for m in g.realization]}
    brackets = [
        [i, j, dump_vector(g.structure_constants[i][j])]
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
        if any(g.structure_constants[i][j])
    ]
    return {"mode": "structure", "dim": g.dim, "brackets": brackets}


def parse_element(doc: Any, g: LieAlgebra) -> tuple:
    """Element as a bare coordinate list, ``{"coords": [...]}`` or ``{"matrix": [[...]]}``."""
    if isinstance(doc, list):
        v = parse_vector(doc)
    elif isinstance(doc, dict) and "coords" in doc:
        v = parse_vector(doc["coords"])
    elif isinstance(doc, dict) and "matrix" in doc:
        if not g.is_matrix_mode:
            raise ValidationError("a matrix element needs a matrix-mode algebra")
        v = g.matrix_coordinates(parse_matrix(doc["matrix"]))
        if v is None:
            raise ValidationError("matrix is not in the span of the algebra basis")
    else:
        raise ValidationError("element must be a coordinate list, {'coords': ...} or {'matrix': ...}")
    if len(v) != g.dim:
        raise ValidationError(f"element has {len(v)} coordinates, algebra has dimension {g.dim}")
    return vector(v)


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from None
