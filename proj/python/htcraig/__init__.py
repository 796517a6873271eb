"""Craig interpolation for here-and-there logic."""

import json as _json

from ._core import (
    Formula,
    ParseError,
    body_normalize,
    entails,
    equivalent,
    eval,
    parse,
    prove,
    strengthen,
    to_cnf,
    to_nh_nnf,
    truth_table,
    verify_interpolant,
)
from ._core import interpolate as _interpolate


def interpolate(a, b):
    """Interpolation result as a dict (status, interpolant, stage1, ...)."""
    return _json.loads(_interpolate(a, b))


__all__ = [
    "Formula",
    "ParseError",
    "body_normalize",
    "entails",
    "equivalent",
    "eval",
    "interpolate",
    "parse",
    "prove",
    "strengthen",
    "to_cnf",
    "to_nh_nnf",
    "truth_table",
    "verify_interpolant",
]
