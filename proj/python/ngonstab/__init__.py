"""Stability conditions, phase classes and stable moduli on n-gon curves.

Structured values are plain dicts and lists in the same layout as the ``ngon`` CLI's JSON output.
"""

import json

from . import _core
from ._core import DomainError, ParseError, class_count

__all__ = [
    "DomainError",
    "ParseError",
    "class_count",
    "cusps",
    "reduce",
    "classify",
    "check_compat",
    "lift",
    "hn",
    "hn_polygon",
    "charge",
    "semistable",
    "rigid",
]


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def cusps(n):
    return json.loads(_core.cusps(n))


def reduce(n, slope):
    return json.loads(_core.reduce(n, str(slope)))


def classify(n, slope=None, phase=None):
    if (slope is None) == (phase is None):
        raise ValueError("pass exactly one of slope or phase")
    if slope is not None:
        return json.loads(_core.classify_slope(n, str(slope)))
    return json.loads(_core.classify_phase(n, _text(phase)))


def check_compat(kauto):
    return json.loads(_core.check_compat(_text(kauto)))


def lift(n, matrix, kernel_action=None, amplitude=0):
    kernel = None if kernel_action is None else _text(kernel_action)
    return json.loads(_core.lift(n, _text(matrix), kernel, amplitude))


def hn(sheaf):
    return json.loads(_core.hn(_text(sheaf)))


def hn_polygon(charges):
    return [tuple(v) for v in _core.hn_polygon([tuple(c) for c in charges])]


def charge(sheaf):
    return json.loads(_core.charge(_text(sheaf)))


def semistable(sheaf):
    return json.loads(_core.semistable(_text(sheaf)))


def rigid(n, r, s):
    return json.loads(_core.rigid(n, r, s))
