"""Sweep heuristics for vehicle routing with structured time windows."""

import json as _json

from ._core import (
    ConfigError,
    Instance,
    ParseError,
    generate,
    lex_compare,
    min_arborescence,
    travel_time,
)
from . import _core

__all__ = [
    "ConfigError",
    "Instance",
    "ParseError",
    "generate",
    "lex_compare",
    "min_arborescence",
    "route",
    "solve",
    "travel_time",
    "validate",
]


def solve(instance, variant="a", direction="both", improve=False, router_budget_s=None):
    """Run sweep, optional improvement and routing.

    Returns a dict with "report" and "schedule" (None when validation failed).
    """
    return _json.loads(_core._solve(instance, variant, direction, improve, router_budget_s))


def route(instance, customers, mode="optimize", router_budget_s=None):
    """Route one cluster given by customer ids."""
    return _json.loads(_core._route(instance, list(customers), mode, router_budget_s))


def validate(instance, schedule):
    """Violation messages for a schedule (dict or JSON text); empty when valid."""
    text = schedule if isinstance(schedule, str) else _json.dumps(schedule)
    return _core._validate(instance, text)
