"""Finite groupoid algebra: bisection groups, gauge groupoids and law checks.

Instances are exchanged as JSON text in the format of docs/instance-format.md.
"""

from pathlib import Path

from ._fingpd import (
    CapExceeded,
    Error,
    ParseError,
    ValidationError,
    bisections,
    canonical,
    check,
    describe,
    emit_fixture,
    families,
    fixture_names,
    gauge,
)

__all__ = [
    "CapExceeded",
    "Error",
    "ParseError",
    "ValidationError",
    "bisections",
    "canonical",
    "check",
    "describe",
    "emit_fixture",
    "families",
    "fixture_names",
    "gauge",
    "load",
]


def load(path):
    """Return the text of an instance file after validating it."""
    text = Path(path).read_text()
    describe(text)
    return text
