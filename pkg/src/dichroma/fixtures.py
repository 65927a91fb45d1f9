"""Bundled reference coefficient tables.

These are the expected Y(1-p, t) and Yhat(p, t) matrices of a specific
connected loopless multigraph on 5 vertices with 7 edges (6 distinct
edges, one of them doubled).  ``dichroma search-figure1`` recovers that
graph by exhaustive search against the first table; the tests use both
tables to pin the companion transform, the Whitney-number formulas and
the independent-set counts to externally known integers.
"""

from __future__ import annotations

import json
from importlib.resources import files

from .poly import BiPoly, from_json

REFERENCE_SIZE = 7
REFERENCE_RANK = 4
REFERENCE_LOOPS = 0
REFERENCE_VERTICES = 5


def _load(name: str) -> BiPoly:
    text = files("dichroma.data").joinpath(name).read_text()
    return from_json(json.loads(text))


def reference_y1mp() -> BiPoly:
    """Y(1-p, t) of the reference graph, variables (p, t)."""
    return _load("reference_y1mp.json")


def reference_yhat() -> BiPoly:
    """Yhat(p, t) of the reference graph, variables (p, t)."""
    return _load("reference_yhat.json")
