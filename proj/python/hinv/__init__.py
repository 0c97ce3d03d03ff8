"""Invariant wedge elements, twists and classification reports from Python.

Inputs are the same JSON documents the command-line tool reads. Each argument
may be a dict, a JSON string, or a path to a JSON file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from . import _core
from ._core import HinvError, PreconditionError, SchemaError, SCHEMA_VERSION

Document = Union[dict, str, "os.PathLike[str]"]

__all__ = [
    "HinvError",
    "PreconditionError",
    "SchemaError",
    "SCHEMA_VERSION",
    "Wedge",
    "validate",
    "invariants",
    "central_z",
    "verify_twist",
    "classify",
    "check_algebra",
]


@dataclass(frozen=True)
class Wedge:
    """sum c x_i ^ x_j over i < j."""

    terms: dict[tuple[int, int], Fraction]
    text: str

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "Wedge":
        terms = {}
        for key, value in doc["terms"].items():
            i, j = (int(p) for p in key.split(","))
            terms[(i, j)] = Fraction(value)
        return cls(terms, doc.get("text", ""))


def _text(doc: Document) -> str:
    if isinstance(doc, dict):
        return json.dumps(doc)
    if isinstance(doc, os.PathLike):
        with open(doc, encoding="utf-8") as f:
            return f.read()
    if doc.lstrip().startswith("{"):
        return doc
    with open(doc, encoding="utf-8") as f:
        return f.read()


def _lie_text(doc: Document) -> str:
    # group documents carry the algebra under "lie"
    parsed = json.loads(_text(doc))
    if "lie" in parsed and "z_r_lattice" in parsed:
        parsed = parsed["lie"]
    return json.dumps(parsed)


def _wedge_arg(r: Union[str, dict, tuple[int, int]]) -> str:
    if isinstance(r, tuple):
        return f"{r[0]},{r[1]}"
    if isinstance(r, dict):
        return json.dumps(r)
    return r


def validate(lie: Document) -> list[str]:
    """Violation messages; empty when the algebra is valid."""
    return _core.validate(_lie_text(lie))


def invariants(lie: Document) -> list[Wedge]:
    """Echelonized basis of the ad-invariant part of wedge^2 g."""
    return [Wedge.from_json(w) for w in json.loads(_core.invariants(_lie_text(lie)))]


def central_z(lie: Document, r, s) -> dict[str, Any]:
    return json.loads(_core.central_z(_lie_text(lie), _wedge_arg(r), _wedge_arg(s)))


def verify_twist(lie: Document, r, trunc: int = 6) -> dict[str, bool]:
    return json.loads(_core.verify_twist(_lie_text(lie), _wedge_arg(r), trunc))


def classify(group: Document) -> dict[str, Any]:
    return json.loads(_core.classify(_text(group)))


def check_algebra(lie: Document, trunc: int = 6, pairs: bool = True) -> dict[str, Any]:
    """Runs the corpus property suite on one algebra."""
    return json.loads(_core.check_algebra(_lie_text(lie), trunc, pairs))
