"""Topological invariants and degree bounds of closed-surface triangulations."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from math import isqrt

from .core import FVector, Triangulation, f_vector, link, min_degree, vertex_degrees
from .errors import NotAClosedSurface, NotDCovered


@dataclass(frozen=True)
class SurfaceDefect:
    """First violated closed-surface condition, with a witness.

    ``kind`` is one of ``"empty"``, ``"edge"``, ``"link"`` or
    ``"disconnected"``.
    """

    kind: str
    witness: object
    message: str

    def __str__(self):
        return self.message


def check_closed_surface(T: Triangulation) -> SurfaceDefect | None:
    """Return ``None`` if ``T`` triangulates a connected closed surface.

    Conditions are checked in order: every edge in exactly two facets,
    every vertex link a single cycle, facet adjacency graph connected.
    """
    if "surface_defect" not in T.memo:
        T.memo["surface_defect"] = _find_defect(T)
    return T.memo["surface_defect"]


def _find_defect(T):
    if not T.facets:
        return SurfaceDefect("empty", None, "triangulation has no facets")
    for e in T.edges:
        k = len(T.edge_facets[e])
        if k != 2:
            return SurfaceDefect("edge", (e, k), f"edge {list(e)} lies in {k} facet(s), expected 2")
    for v in T.vertices:
        L = link(T, v)
        if not L.is_cycle():
            comps = L.components()
            return SurfaceDefect(
                "link", (v, comps),
                f"link of vertex {v!r} is not a single cycle ({len(comps)} components)")
    comps = facet_components(T)
    if len(comps) > 1:
        return SurfaceDefect(
            "disconnected", [len(c) for c in comps],
            f"facet adjacency graph has {len(comps)} components")
    return None


def facet_components(T: Triangulation) -> list:
    """Connected components of the facet adjacency graph (shared edges)."""
    seen = set()
    comps = []
    for f in T.facets:
        if f in seen:
            continue
        comp = [f]
        seen.add(f)
        queue = deque([f])
        while queue:
            g = queue.popleft()
            for h in _adjacent(T, g):
                if h not in seen:
                    seen.add(h)
                    comp.append(h)
                    queue.append(h)
        comps.append(comp)
    return comps


def _adjacent(T, f):
    a, b, c = f
    for e in ((a, b), (a, c), (b, c)):
        for g in T.edge_facets[e]:
            if g != f:
                yield g


def _require_surface(T):
    defect = check_closed_surface(T)
    if defect is not None:
        raise NotAClosedSurface(defect)


def euler_characteristic(T: Triangulation) -> int:
    f0, f1, f2 = f_vector(T)
    return f0 - f1 + f2


@dataclass(frozen=True)
class Orientation:
    """Result of orientation propagation.

    ``orientation`` maps each facet to an oriented vertex triple when the
    surface is orientable.  Otherwise ``conflict`` is a closed path of
    adjacent facets along which the propagated orientation gets reversed.
    """

    orientable: bool
    orientation: dict | None = None
    conflict: tuple | None = None


def _directed(t):
    a, b, c = t
    return ((a, b), (b, c), (c, a))


def orientability(T: Triangulation, seed: int | None = None) -> Orientation:
    """Propagate a facet orientation breadth-first over shared edges.

    With ``seed`` set, the start facet and the neighbour visiting order
    are randomised; the verdict never depends on either.
    """
    _require_surface(T)
    rng = random.Random(seed) if seed is not None else None
    facets = list(T.facets)
    start = rng.choice(facets) if rng else facets[0]
    oriented = {start: start}
    parent = {start: None}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        arcs = list(_directed(oriented[f]))
        if rng:
            rng.shuffle(arcs)
        for a, b in arcs:
            e = (a, b) if T.key(a) < T.key(b) else (b, a)
            g = next(h for h in T.edge_facets[e] if h != f)
            x = next(v for v in g if v != a and v != b)
            want = (b, a, x)
            if g not in oriented:
                oriented[g] = want
                parent[g] = f
                queue.append(g)
            elif (a, b) in _directed(oriented[g]):
                return Orientation(False, conflict=_closed_path(parent, f, g))
    return Orientation(True, orientation=oriented)


def _closed_path(parent, f, g):
    def chain(h):
        out = []
        while h is not None:
            out.append(h)
            h = parent[h]
        return out

    pf, pg = chain(f), chain(g)
    common = set(pf) & set(pg)
    head = [h for h in pf if h not in common]
    meet = next(h for h in pf if h in common)
    tail = [h for h in pg if h not in common]
    # f ... meet ... g, closed by the shared edge g-f
    return tuple(head + [meet] + tail[::-1] + [f])


def is_orientable(T: Triangulation, seed: int | None = None) -> bool:
    return orientability(T, seed).orientable


def genus(T: Triangulation) -> int:
    """Orientable genus, or non-orientable genus (number of crosscaps)."""
    _require_surface(T)
    chi = euler_characteristic(T)
    if orientability(T).orientable:
        return (2 - chi) // 2
    return 2 - chi


def equivelar_degree(T: Triangulation) -> int | None:
    degs = set(vertex_degrees(T).values())
    return degs.pop() if len(degs) == 1 else None


def is_neighborly(T: Triangulation) -> bool:
    f0, f1, _ = f_vector(T)
    return f0 > 0 and f1 == f0 * (f0 - 1) // 2


def covered_degrees(T: Triangulation) -> set:
    """All ``d`` such that every edge has an endpoint of degree ``d``."""
    deg = vertex_degrees(T)
    out = set()
    for d in set(deg.values()):
        if all(deg[a] == d or deg[b] == d for a, b in T.edge_facets):
            out.add(d)
    return out


@dataclass(frozen=True)
class CoveredCore:
    """Subgraph induced by the degree-``d`` vertices of a d-covered triangulation."""

    d: int
    h_vertices: frozenset
    h_edges: frozenset
    min_degree_h: int

    @property
    def f0(self) -> int:
        return len(self.h_vertices)

    @property
    def f1(self) -> int:
        return len(self.h_edges)


def covered_core(T: Triangulation, d: int) -> CoveredCore:
    deg = vertex_degrees(T)
    if not T.facets or not all(deg[a] == d or deg[b] == d for a, b in T.edge_facets):
        raise NotDCovered(d)
    hv = frozenset(v for v, k in deg.items() if k == d)
    he = frozenset(e for e in T.edge_facets if e[0] in hv and e[1] in hv)
    hdeg = dict.fromkeys(hv, 0)
    for a, b in he:
        hdeg[a] += 1
        hdeg[b] += 1
    return CoveredCore(d, hv, he, min(hdeg.values()))


def _disc(chi):
    return isqrt(49 - 24 * chi)


def heawood_min_vertices(chi: int) -> int:
    """Least ``n`` with ``n >= (7 + sqrt(49 - 24 chi)) / 2``, computed exactly."""
    disc = 49 - 24 * chi
    s = isqrt(disc)
    if s * s == disc:
        return (8 + s) // 2
    return (7 + s) // 2 + 1


def q_bound(chi: int) -> int:
    """Upper bound on the minimum vertex degree of a triangulation with Euler characteristic chi."""
    if chi > 0:
        return 5
    return (5 + _disc(chi)) // 2


def d_bound(chi: int) -> int:
    """Upper bound on ``d`` for d-covered triangulations."""
    return 2 * q_bound(chi)


@dataclass(frozen=True)
class SurfaceReport:
    fvec: FVector
    chi: int
    orientable: bool
    genus: int
    equivelar_degree: int | None
    neighborly: bool
    covered_degrees: frozenset
    min_degree: int
    heawood_min: int
    q_bound: int
    d_bound: int
    q_tight: bool
    d_tight_witnesses: frozenset

    def to_dict(self) -> dict:
        return {
            "fvec": {"f0": self.fvec.f0, "f1": self.fvec.f1, "f2": self.fvec.f2},
            "chi": self.chi,
            "orientable": self.orientable,
            "genus": self.genus,
            "equivelar_degree": self.equivelar_degree,
            "neighborly": self.neighborly,
            "covered_degrees": sorted(self.covered_degrees),
            "min_degree": self.min_degree,
            "heawood_min": self.heawood_min,
            "q_bound": self.q_bound,
            "d_bound": self.d_bound,
            "q_tight": self.q_tight,
            "d_tight_witnesses": sorted(self.d_tight_witnesses),
        }

    def summary(self) -> str:
        f0, f1, f2 = self.fvec
        kind = "orientable" if self.orientable else "non-orientable"
        q = self.equivelar_degree if self.equivelar_degree is not None else "-"
        parts = [
            f"f=({f0},{f1},{f2})",
            f"chi={self.chi}",
            f"{kind} genus {self.genus}",
            f"q={q}",
            f"q_bound={self.q_bound}",
            f"q_tight={'yes' if self.q_tight else 'no'}",
            f"neighborly={'yes' if self.neighborly else 'no'}",
            f"covered={sorted(self.covered_degrees)}",
            f"d_bound={self.d_bound}",
        ]
        return ", ".join(parts)


def classify(T: Triangulation) -> SurfaceReport:
    _require_surface(T)
    fvec = f_vector(T)
    chi = fvec.f0 - fvec.f1 + fvec.f2
    orientable = orientability(T).orientable
    g = (2 - chi) // 2 if orientable else 2 - chi
    q = equivelar_degree(T)
    cov = frozenset(covered_degrees(T))
    qb, db = q_bound(chi), d_bound(chi)
    return SurfaceReport(
        fvec=fvec,
        chi=chi,
        orientable=orientable,
        genus=g,
        equivelar_degree=q,
        neighborly=is_neighborly(T),
        covered_degrees=cov,
        min_degree=min_degree(T),
        heawood_min=heawood_min_vertices(chi),
        q_bound=qb,
        d_bound=db,
        q_tight=q == qb,
        d_tight_witnesses=cov & {db},
    )
