"""Online hitting sets of rectangles and polygon homothets."""

import json

from ._core import (
    BBDTree,
    GeometryError,
    HomothetHitter,
    InfeasibleInstance,
    InfeasibleObject,
    OnlineHitter,
    ParseError,
    csv_header,
    exact_min_hitting_set,
    generate,
)
from ._core import run as _run

__all__ = [
    "BBDTree",
    "GeometryError",
    "HomothetHitter",
    "InfeasibleInstance",
    "InfeasibleObject",
    "OnlineHitter",
    "ParseError",
    "csv_header",
    "exact_min_hitting_set",
    "generate",
    "run",
]


def run(instance, compute_opt=True, time_limit=10.0, deterministic=False):
    """Run the online algorithm on an instance (JSON text or dict).

    Returns (report dict, CSV row).
    """
    if not isinstance(instance, str):
        instance = json.dumps(instance)
    report, row = _run(instance, compute_opt, time_limit, deterministic)
    return json.loads(report), row
