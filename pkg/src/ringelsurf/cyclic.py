"""Triangulations with cyclic symmetry, built as Z_n-orbits of triangles."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Triangulation
from .errors import ConstructionDefect, DegenerateTriple, ParameterOutOfRange


@dataclass(frozen=True)
class GeneratorSet:
    """Orbit representatives for a cyclic triangulation on ``n`` vertices.

    ``provenance`` is ``"ringel"`` (with ``k`` set), ``"torus"`` or ``"user"``.
    """

    n: int
    generators: tuple
    provenance: str = "user"
    k: int | None = None

    def __post_init__(self):
        for g in self.generators:
            _check_triple(g, self.n)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _check_triple(triple, n):
    if len(triple) != 3 or len({x % n for x in triple}) != 3:
        raise DegenerateTriple(triple, n)


def cyclic_orbit(triangle, n: int) -> frozenset:
    """All distinct translates ``{a+j, b+j, c+j} mod n`` as sorted triples.

    >>> len(cyclic_orbit([0, 3, 6], 9))
    3
    """
    _check_triple(triangle, n)
    a, b, c = (x % n for x in triangle)
    # translates are periodic; the first repeat of the start closes the orbit
    start = tuple(sorted((a, b, c)))
    out = [start]
    for j in range(1, n):
        t = tuple(sorted(((a + j) % n, (b + j) % n, (c + j) % n)))
        if t == start:
            break
        out.append(t)
    return frozenset(out)


def ringel_generators(k: int, n: int | None = None) -> GeneratorSet:
    """Orbit generating triangles of the generalized Ringel family.

    All entries lie in ``0..6k+3``, so the same list serves every
    ``n >= 7 + 12k``.  ``n`` defaults to the neighborly case ``7 + 12k``.
    """
    if k < 0:
        raise ParameterOutOfRange(f"k must be non-negative, got {k}")
    if n is None:
        n = 7 + 12 * k
    if k == 0:
        return GeneratorSet(n, ((0, 1, 3), (0, 2, 3)), "ringel", 0)
    gens = []
    for i in range(1, k + 1):
        gens.append((0, 2 * i - 1, 3 * k + 2 + i))
        gens.append((0, 2 * i, 3 * k + 2 + i))
    gens.append((0, 4 * k + 3, 6 * k + 3))
    gens.append((0, 2 * k + 2, 4 * k + 3))
    for m in range(4 * k + 4, 5 * k + 3):
        gens.append((0, m, 10 * k + 6 - m))
        gens.append((0, m, 10 * k + 7 - m))
    gens.append((0, 2 * k + 1, 5 * k + 3))
    gens.append((0, 5 * k + 3, 5 * k + 4))
    return GeneratorSet(n, tuple(gens), "ringel", k)


def _expand(gens: GeneratorSet) -> list:
    facets = []
    seen = set()
    strict = gens.provenance == "ringel"
    for g in gens:
        orbit = cyclic_orbit(g, gens.n)
        if strict and not seen.isdisjoint(orbit):
            raise ConstructionDefect(f"orbit of {list(g)} meets an earlier orbit mod {gens.n}")
        new = orbit - seen
        seen |= new
        facets.extend(new)
    return facets


def from_generator_set(gens: GeneratorSet, name: str | None = None) -> Triangulation:
    return Triangulation(tuple(_expand(gens)), name=name)


def from_cyclic_generators(n: int, triples, name: str | None = None) -> Triangulation:
    """Union of the Z_n-orbits of ``triples``; no surface check is made."""
    gens = GeneratorSet(n, tuple(tuple(t) for t in triples), "user")
    return from_generator_set(gens, name=name)


def ringel(k: int, n: int) -> Triangulation:
    """The cyclic triangulation R(k, n) of the orientable surface of genus kn+1."""
    if k < 0 or n < 7 + 12 * k:
        raise ParameterOutOfRange(f"R(k={k}, n={n}) needs k >= 0 and n >= {7 + 12 * max(k, 0)}")
    return from_generator_set(ringel_generators(k, n), name=f"R_{k},{n}")


def torus(n: int) -> Triangulation:
    """Altshuler's cyclic torus T2(n) for n >= 7."""
    if n < 7:
        raise ParameterOutOfRange(f"T2(n) needs n >= 7, got {n}")
    gens = GeneratorSet(n, ((0, 1, 3), (0, 2, 3)), "torus")
    return from_generator_set(gens, name=f"T2({n})")


def shift(T: Triangulation, n: int, by: int = 1) -> Triangulation:
    """Translate every label of a Z_n-labelled triangulation by ``by`` mod n."""
    return T.relabel(lambda v: (v + by) % n)
