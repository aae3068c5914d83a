"""Exact Weyl-superalgebra realizations of Lie (super)algebras.

Thin wrapper over the compiled core: every operation takes the algebra
file text (JSON with fields n, m, C, K) and returns plain dicts whose
rational values are exact "p/q" strings.
"""

import json

from weylreal._core import (  # noqa: F401
    bernoulli_json,
    realization_str,
    realize_json,
    render_spec,
    series_checks_json,
    uniqueness_json,
    validate_json,
    verify_json,
)

__all__ = [
    "validate",
    "realize",
    "verify",
    "bernoulli",
    "series_checks",
    "uniqueness",
    "render_spec",
    "realization_str",
]


def validate(text):
    """Structure-constant report: {"valid": bool, "violations": [...]}."""
    return json.loads(validate_json(text))


def realize(text, order=4):
    """Verified realization export; raises ValueError on invalid input."""
    return json.loads(realize_json(text, order))


def verify(text, order=4):
    """Relation, classical-limit and shift-commutator reports."""
    return json.loads(verify_json(text, order))


def bernoulli(order=4):
    """Coefficients b_k and both Bernoulli-number sign conventions."""
    return json.loads(bernoulli_json(order))


def series_checks(order=0):
    """Generating-function identity checks; order 0 uses the defaults."""
    return json.loads(series_checks_json(order))


def uniqueness(text, max_order=3):
    """Order-by-order coefficient rediscovery from the relations."""
    return json.loads(uniqueness_json(text, max_order))
