"""Largeness certificates for finitely presented groups with proper-power relators.

Presentations are passed as text, e.g. ``"< a, t | [a,t]^2, [a,t^2]^2 >"``.
Reports come back as plain dicts with the same layout as the CLI's JSON output.
"""

import json

from . import _core
from ._core import LargenessError

__all__ = [
    "LargenessError",
    "abelianisation",
    "certify",
    "conjugate_rewrite",
    "deficiency_bound",
    "delta",
    "normalize",
    "normalize_to_t",
    "smith_normal_form",
    "spectrum",
    "summary",
    "triangularize",
]


def normalize(text):
    """Reduced presentation text."""
    return _core.normalize(text)


def summary(text):
    return json.loads(_core.summary(text))


def abelianisation(text):
    return json.loads(_core.abelianisation(text))


def spectrum(text):
    return json.loads(_core.spectrum(text))


def deficiency_bound(text):
    return json.loads(_core.deficiency_bound(text))


def certify(text, phi=None, rules=None):
    """First certificate in rule order, or every rejection.

    ``phi`` is a map like ``"t=1,a=0"``; ``rules`` a list of rule names.
    """
    return json.loads(_core.certify(text, phi, None if rules is None else list(rules)))


def delta(text, word, phi=None):
    return int(_core.delta(text, word, phi))


def normalize_to_t(text, phi=None):
    return json.loads(_core.normalize_to_t(text, phi))


def triangularize(text):
    return json.loads(_core.triangularize(text))


def conjugate_rewrite(text, word, phi=None):
    return _core.conjugate_rewrite(text, word, phi)


def smith_normal_form(rows):
    """U, D, V with U M V = D, all entries as Python ints."""
    raw = _core.smith_normal_form([[str(int(x)) for x in row] for row in rows])
    mat = lambda m: [[int(x) for x in row] for row in m]
    return {
        "U": mat(raw["U"]),
        "D": mat(raw["D"]),
        "V": mat(raw["V"]),
        "invariant_factors": [int(x) for x in raw["invariant_factors"]],
        "rank": raw["rank"],
    }
