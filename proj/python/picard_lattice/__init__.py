"""Exact analysis of Picard lattices of IHS manifolds.

Every function takes an input document (a dict or a JSON string) and returns
the report as a dict. Integers in reports are decimal strings; use
:func:`integers` to turn a vector or matrix of them into Python ints.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any, Mapping, Union

from . import _core
from ._core import (
    BoundExceededError,
    ContractViolation,
    ParseError,
    PicardError,
    PreconditionError,
    schema_version,
)

Document = Union[str, Mapping[str, Any]]

__all__ = [
    "BoundExceededError",
    "ContractViolation",
    "ParseError",
    "PicardError",
    "PreconditionError",
    "alpha",
    "analyze",
    "enumerate_classes",
    "integers",
    "pell",
    "plot_section",
    "rank2",
    "reduce",
    "schema",
    "schema_version",
]


def _text(doc: Document, bound: int | None = None) -> str:
    data = json.loads(doc) if isinstance(doc, str) else dict(doc)
    if bound is not None:
        data["bound"] = {**data.get("bound", {}), "max_ample_pairing": str(bound)}
    return json.dumps(data)


def analyze(doc: Document, bound: int | None = None) -> dict:
    return json.loads(_core.analyze(_text(doc, bound)))


def enumerate_classes(doc: Document, bound: int | None = None) -> dict:
    return json.loads(_core.enumerate(_text(doc, bound)))


def rank2(doc: Document, bound: int | None = None) -> dict:
    return json.loads(_core.rank2(_text(doc, bound)))


def reduce(doc: Document, max_steps: int = 10000) -> dict:
    return json.loads(_core.reduce(_text(doc), max_steps))


def alpha(doc: Document) -> dict:
    return json.loads(_core.alpha(_text(doc)))


def pell(doc: Document) -> dict:
    return json.loads(_core.pell(_text(doc)))


def plot_section(doc: Document, bound: int | None = None) -> str:
    return _core.plot_section(_text(doc, bound))


def integers(value: Any) -> Any:
    """Convert a decimal string, or nested lists of them, to ints."""
    if isinstance(value, list):
        return [integers(v) for v in value]
    return int(value)


def schema() -> dict:
    """The report JSON schema."""
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
