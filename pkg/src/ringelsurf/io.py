"""Plain-text facet lists.

One facet per line, three whitespace-separated vertex tokens.  ``#``
starts a comment; blank lines are ignored.  Integer tokens are read as
ints, anything else is kept as a string label.
"""

from __future__ import annotations

from pathlib import Path

from .core import Triangulation
from .errors import ParseError


def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse(text: str, name: str | None = None) -> Triangulation:
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(lineno, f"expected 3 vertex tokens, got {len(toks)}")
        facet = tuple(_token(t) for t in toks)
        if len(set(facet)) != 3:
            raise ParseError(lineno, f"repeated vertex in facet {' '.join(toks)}")
        facets.append(facet)
    return Triangulation(tuple(facets), name=name)


def serialize(T: Triangulation) -> str:
    """Canonical text form: sorted facets, LF line endings."""
    return "".join(f"{a} {b} {c}\n" for a, b, c in T.facets)


def read(path, name: str | None = None) -> Triangulation:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), name=name or path.stem)


def write(T: Triangulation, path) -> None:
    Path(path).write_text(serialize(T), encoding="utf-8", newline="\n")
