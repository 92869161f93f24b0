"""Embedded explicit examples of q-equivelar triangulations with q at its bound.

Facet lists are stored under ``data/`` with 1-based vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import Triangulation
from .io import parse


@dataclass(frozen=True)
class Expected:
    chi: int
    q: int
    n: int
    orientable: bool


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    triangulation: Triangulation
    expected: Expected


EXPECTED = {
    "E1": Expected(-7, 9, 14, False),
    "E4": Expected(-27, 15, 18, False),
    "E12": Expected(-60, 21, 24, False),
    "E13": Expected(-64, 22, 24, True),
    "E16": Expected(-78, 24, 26, False),
    "E19": Expected(-110, 28, 30, True),
}

# Known existence per (chi, q, n): vertex-transitive orientable, orientable,
# vertex-transitive non-orientable, non-orientable.  "-" means chi is odd.
TABLE1_EXISTENCE = {
    (-2, 7, 12): ("yes", "yes", "yes", "yes"),
    (-4, 8, 12): ("yes", "yes", "no", "yes"),
    (-6, 9, 12): ("yes", "yes", "yes", "yes"),
    (-7, 9, 14): ("-", "-", "no", "yes, E1"),
    (-8, 10, 12): ("yes", "yes", "yes", "yes"),
    (-14, 12, 14): ("yes", "yes", "yes", "yes"),
    (-15, 12, 15): ("-", "-", "yes", "yes"),
    (-16, 12, 16): ("yes, E2", "yes, E2", "yes, E3", "yes, E3"),
    (-27, 15, 18): ("-", "-", "no", "yes, E4"),
    (-30, 16, 18): ("yes, E5", "yes, E5", "yes, E6", "yes, E6"),
    (-40, 18, 20): ("yes, E7", "yes, E7", "yes, E8", "yes, E8"),
    (-42, 18, 21): ("yes, E9", "yes, E9", "yes, E10", "yes, E10"),
    (-60, 21, 24): ("yes, E11", "yes, E11", "?", "yes, E12"),
    (-64, 22, 24): ("?", "yes, E13", "yes, E14", "yes, E14"),
    (-78, 24, 26): ("yes, E15", "yes, E15", "?", "yes, E16"),
    (-81, 24, 27): ("-", "-", "yes, E17", "yes, E17"),
    (-105, 27, 30): ("-", "-", "yes, E18", "yes, E18"),
    (-110, 28, 30): ("?", "yes, E19", "yes, E20", "yes, E20"),
}


def ids() -> list:
    return list(EXPECTED)


@lru_cache(maxsize=None)
def load(eid: str) -> CorpusEntry:
    if eid not in EXPECTED:
        raise KeyError(f"unknown corpus entry {eid!r}; known: {', '.join(EXPECTED)}")
    text = resources.files(__package__).joinpath("data", f"{eid}.txt").read_text(encoding="utf-8")
    return CorpusEntry(eid, parse(text, name=eid), EXPECTED[eid])


def corpus() -> list:
    return [load(eid) for eid in EXPECTED]
