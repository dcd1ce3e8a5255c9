"""Bundled example documents, loadable by name."""

from __future__ import annotations

from importlib import resources

from .. import dsl
from ..core import Ologism
from ..model import Model

NAMES = (
    "animals",
    "custodian",
    "has_mother",
    "mother_ologism",
    "square",
)


def source(name: str, kind: str = "ologism") -> str:
    """Raw document text; ``kind`` is ``ologism`` or ``model``."""
    suffix = dsl.OLOGISM_EXTENSION if kind == "ologism" else dsl.MODEL_EXTENSION
    return resources.files(__package__).joinpath(name + suffix).read_text(encoding="utf-8")


def load(name: str) -> Ologism:
    result = dsl.parse_ologism(source(name))
    if result.value is None:
        raise ValueError(f"bundled document {name!r} does not parse: {result.diagnostics}")
    return result.value


def load_model(name: str) -> Model:
    result = dsl.parse_model(source(name, kind="model"))
    if result.value is None:
        raise ValueError(f"bundled model {name!r} does not parse: {result.diagnostics}")
    return result.value
