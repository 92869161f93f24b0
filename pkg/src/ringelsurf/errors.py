"""Exception hierarchy shared by all modules."""


class TriangulationError(ValueError):
    """Base class for every error raised by ringelsurf."""


class DegenerateFacet(TriangulationError):
    def __init__(self, facet):
        self.facet = tuple(facet)
        super().__init__(f"degenerate facet {list(self.facet)}: labels must be distinct")


class UnknownVertex(TriangulationError, KeyError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")

    def __str__(self):
        return self.args[0]


class NotAClosedSurface(TriangulationError):
    def __init__(self, defect):
        self.defect = defect
        super().__init__(f"not a closed surface: {defect}")


class NotDCovered(TriangulationError):
    def __init__(self, d):
        self.d = d
        super().__init__(f"triangulation is not {d}-covered")


class DegenerateTriple(TriangulationError):
    def __init__(self, triple, n):
        self.triple = tuple(triple)
        self.n = n
        super().__init__(f"triple {list(self.triple)} has repeated residues mod {n}")


class ParameterOutOfRange(TriangulationError):
    pass


class ConstructionDefect(TriangulationError):
    pass


class ParseError(TriangulationError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
