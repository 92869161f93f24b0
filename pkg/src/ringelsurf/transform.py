"""Combinatorial rewrites of triangulations."""

from __future__ import annotations

from .core import Triangulation


def _fresh_start(T: Triangulation) -> int:
    ints = [v for v in T.vertices if isinstance(v, int) and not isinstance(v, bool)]
    return max(max(ints) + 1, len(T.vertices)) if ints else len(T.vertices)


def stack(T: Triangulation) -> Triangulation:
    """Stack every facet: cone a new vertex over each triangle.

    Facet ``{a, b, c}`` is replaced by ``{a, b, w}``, ``{a, c, w}``,
    ``{b, c, w}``.  New labels are consecutive integers assigned in
    canonical facet order, starting at ``f0`` for 0-based labels and past
    the largest integer label otherwise.  Works on any complex; surface
    properties carry over only from surface inputs.
    """
    w = _fresh_start(T)
    out = []
    for a, b, c in T.facets:
        out += [(a, b, w), (a, c, w), (b, c, w)]
        w += 1
    name = f"stack({T.name})" if T.name else None
    return Triangulation(tuple(out), name=name)
