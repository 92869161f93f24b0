"""Parameter arithmetic for equivelar triangulations of surfaces with chi < 0.

A triple ``(chi, q, n)`` is admissible when ``q = 6 - 6 chi / n`` is an
integer and ``n`` meets the Heawood bound.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .verify import heawood_min_vertices, q_bound


@dataclass(frozen=True, order=True)
class AdmissibleTriple:
    chi: int
    q: int
    n: int
    neighborly: bool
    q_tight: bool
    orientable_admissible: bool

    @classmethod
    def make(cls, chi: int, q: int, n: int) -> AdmissibleTriple:
        return cls(chi, q, n, q == n - 1, q == q_bound(chi), chi % 2 == 0)

    def as_tuple(self) -> tuple:
        return (self.chi, self.q, self.n)

    def to_dict(self) -> dict:
        return asdict(self)


def _divisors(m: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def enumerate_admissible(chi: int) -> list:
    """All admissible triples for one Euler characteristic, sorted by n."""
    if chi >= 0:
        raise ValueError(f"chi must be negative, got {chi}")
    nmin = heawood_min_vertices(chi)
    out = []
    for n in _divisors(-6 * chi):
        q = 6 - 6 * chi // n
        if n >= nmin and q >= 7:
            out.append(AdmissibleTriple.make(chi, q, n))
    return out


def table1_rows(chi_min: int) -> list:
    """Non-neighborly triples with q at its upper bound, for chi_min <= chi < 0.

    Ordered by |chi|.
    """
    if chi_min >= 0:
        raise ValueError(f"chi_min must be negative, got {chi_min}")
    rows = []
    for chi in range(-1, chi_min - 1, -1):
        q = q_bound(chi)
        if q <= 6 or (-6 * chi) % (q - 6):
            continue
        n = -6 * chi // (q - 6)
        if q < n - 1 and n >= heawood_min_vertices(chi):
            rows.append(AdmissibleTriple.make(chi, q, n))
    return rows


def admissible_range(chi_min: int, tight_only: bool = False) -> list:
    """Admissible triples for every chi in ``chi_min..-1``.

    With ``tight_only`` this is :func:`table1_rows`.
    """
    if tight_only:
        return table1_rows(chi_min)
    out = []
    for chi in range(-1, chi_min - 1, -1):
        out.extend(enumerate_admissible(chi))
    return out


def neighborly_chi(n: int) -> int | None:
    """Euler characteristic forced on a neighborly triangulation with n vertices."""
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    if n % 3 == 2:
        return None
    return n * (7 - n) // 6


def orientable_neighborly_possible(n: int) -> bool:
    return n % 12 in (0, 3, 4, 7)


# Equivelar triangulations with q <= 5, as (n, q): three of S^2, one of RP^2.
POSITIVE_CHI_EQUIVELAR = {2: ((4, 3), (6, 4), (12, 5)), 1: ((6, 5),)}
