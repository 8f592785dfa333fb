"""Admissible bases and ideal presentations of type C principal-like subspaces."""

from ._core import (
    basis,
    character,
    refined_character,
    relations,
    verify,
    verify_report_json,
)

__all__ = [
    "basis",
    "character",
    "refined_character",
    "relations",
    "verify",
    "verify_report_json",
]
