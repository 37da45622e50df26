"""The shipped fixture corpus (JSON files under ``liejcd/data``)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .algebra import LieAlgebra
from .serialize import parse_algebra, parse_element

NAMES = (
    "sl2",
    "sl3",
    "gl2",
    "borel2",
    "heisenberg3",
    "sl2_ltimes_q2",
    "sl2_plus_heisenberg",
    "line_diag12",
)


def fixture_path(name: str):
    return resources.files("liejcd") / "data" / f"{name}.json"


@lru_cache(maxsize=None)
def _document(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(NAMES)}")
    return json.loads(fixture_path(name).read_text())


@lru_cache(maxsize=None)
def load(name: str) -> LieAlgebra:
    return parse_algebra(_document(name))


def elements(name: str) -> dict[str, tuple]:
    """Named elements stored alongside the algebra (coordinates in its basis)."""
    g = load(name)
    return {k: parse_element(v, g) for k, v in _document(name).get("elements", {}).items()}


def description(name: str) -> str:
    return _document(name).get("description", "")
