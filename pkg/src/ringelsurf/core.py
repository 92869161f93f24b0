"""Abstract triangulations of surfaces.

A :class:`Triangulation` is a finite pure 2-dimensional simplicial complex
given by its facets.  Vertex labels are opaque hashable tokens (integers
in practice).  Facets are kept in canonical form: each facet sorted, the
facet list sorted, no duplicates.  Two triangulations compare equal iff
they have the same facet set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple

from .errors import DegenerateFacet, UnknownVertex

Vertex = Hashable


def label_key(labels: Iterable[Vertex]):
    """Return the sort key used for a label set.

    Integer label sets sort numerically, anything else sorts by string.
    """
    labels = list(labels)
    if all(isinstance(v, int) and not isinstance(v, bool) for v in labels):
        return lambda v: v
    return str


class FVector(NamedTuple):
    f0: int
    f1: int
    f2: int


@dataclass(frozen=True)
class Triangulation:
    facets: tuple
    name: str | None = field(default=None, compare=False)
    vertices: tuple = field(init=False)

    def __post_init__(self):
        raw = [tuple(f) for f in self.facets]
        for f in raw:
            if len(f) != 3 or len(set(f)) != 3:
                raise DegenerateFacet(f)
        key = label_key(v for f in raw for v in f)
        facets = sorted({tuple(sorted(f, key=key)) for f in raw},
                        key=lambda f: tuple(key(v) for v in f))
        vertices = sorted({v for f in facets for v in f}, key=key)
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "vertices", tuple(vertices))

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<Triangulation{name} f={tuple(f_vector(self))}>"

    def __len__(self):
        return len(self.facets)

    @cached_property
    def memo(self) -> dict:
        """Per-instance store for derived invariants (instances are immutable)."""
        return {}

    @cached_property
    def key(self):
        return label_key(self.vertices)

    @cached_property
    def index(self) -> dict:
        """Dense index of each vertex label, in canonical order."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_facets(self) -> dict:
        """Map each edge (canonically ordered pair) to the facets containing it."""
        inc = defaultdict(list)
        for f in self.facets:
            a, b, c = f
            inc[(a, b)].append(f)
            inc[(a, c)].append(f)
            inc[(b, c)].append(f)
        return dict(inc)

    @cached_property
    def edges(self) -> tuple:
        key = self.key
        return tuple(sorted(self.edge_facets, key=lambda e: (key(e[0]), key(e[1]))))

    @cached_property
    def vertex_facets(self) -> dict:
        star = defaultdict(list)
        for f in self.facets:
            for v in f:
                star[v].append(f)
        return dict(star)

    @cached_property
    def neighbors(self) -> dict:
        nb = {v: set() for v in self.vertices}
        for a, b in self.edge_facets:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def relabel(self, mapping) -> Triangulation:
        """Apply a vertex relabelling given as a dict or a callable."""
        fn = mapping if callable(mapping) else mapping.__getitem__
        return Triangulation(tuple(tuple(fn(v) for v in f) for f in self.facets), name=self.name)


def build(facets: Iterable[Iterable[Vertex]], name: str | None = None) -> Triangulation:
    """Build a triangulation from vertex triples.

    Duplicates are dropped; a triple with a repeated label raises
    :class:`DegenerateFacet`.

    >>> build([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).vertices
    (1, 2, 3, 4)
    """
    return Triangulation(tuple(tuple(f) for f in facets), name=name)


def f_vector(T: Triangulation) -> FVector:
    return FVector(len(T.vertices), len(T.edge_facets), len(T.facets))


def vertex_degrees(T: Triangulation) -> dict:
    """Degree of every vertex in the 1-skeleton."""
    return {v: len(nb) for v, nb in T.neighbors.items()}


def min_degree(T: Triangulation) -> int:
    return min(len(nb) for nb in T.neighbors.values())


@dataclass(frozen=True)
class VertexLink:
    """Boundary of the star of ``center``: one edge per facet through it."""

    center: Vertex
    boundary: tuple

    @property
    def vertices(self) -> set:
        return {v for e in self.boundary for v in e}

    def __len__(self):
        return len(self.boundary)

    def components(self) -> list:
        """Vertex sets of the connected components of the boundary graph."""
        adj = defaultdict(set)
        for a, b in self.boundary:
            adj[a].add(b)
            adj[b].add(a)
        seen = set()
        comps = []
        for start in adj:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_cycle(self) -> bool:
        """True iff the boundary is one cycle through every link vertex once."""
        if len(self.boundary) < 3:
            return False
        count = defaultdict(int)
        for a, b in self.boundary:
            count[a] += 1
            count[b] += 1
        if any(c != 2 for c in count.values()):
            return False
        return len(self.components()) == 1

    def cycle(self) -> list:
        """The link vertices in cyclic order; raises ValueError if not a cycle."""
        if not self.is_cycle():
            raise ValueError(f"link of {self.center!r} is not a single cycle")
        adj = defaultdict(list)
        for a, b in self.boundary:
            adj[a].append(b)
            adj[b].append(a)
        start = self.boundary[0][0]
        order = [start]
        prev, cur = start, adj[start][0]
        while cur != start:
            order.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        return order


def link(T: Triangulation, v: Vertex) -> VertexLink:
    if v not in T.vertex_facets:
        raise UnknownVertex(v)
    boundary = tuple(tuple(u for u in f if u != v) for f in T.vertex_facets[v])
    return VertexLink(v, boundary)
