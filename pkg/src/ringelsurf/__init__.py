"""Cyclic and equivelar triangulations of closed surfaces."""

from .core import FVector, Triangulation, VertexLink, build, f_vector, link, min_degree, vertex_degrees
from .cyclic import (GeneratorSet, cyclic_orbit, from_cyclic_generators, ringel,
                     ringel_generators, torus)
from .embedded import corpus
from .errors import (ConstructionDefect, DegenerateFacet, DegenerateTriple, NotAClosedSurface,
                     NotDCovered, ParameterOutOfRange, ParseError, TriangulationError, UnknownVertex)
from .io import parse, serialize
from .transform import stack
from .triples import AdmissibleTriple, enumerate_admissible, neighborly_chi, table1_rows
from .verify import (CoveredCore, SurfaceReport, check_closed_surface, classify, covered_core,
                     covered_degrees, d_bound, equivelar_degree, euler_characteristic, genus,
                     heawood_min_vertices, is_neighborly, orientability, q_bound)

__version__ = "0.1.0"
