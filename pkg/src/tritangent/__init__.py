"""Exact computation of lines tangent to four triangles in 3-space.

Core surface:
  geometry     exact points, Plücker lines, planes, triangles, predicates
  transversal  the four-line transversal problem over Q(sqrt(D))
  counting     tangent counts over the 81 edge quadruples
  stab         pencil-of-planes combinatorics and the stab graph
  search       randomized tangent-count statistics (filtered-exact)
  cli          the ``tritangent`` command
"""

from .counting import classify_general_position, count_tangents, partition_FI
from .geometry import PluckerLine, Triangle, side
from .transversal import TransversalKind, transversals, transversals_via_quadric

__all__ = [
    "classify_general_position",
    "count_tangents",
    "partition_FI",
    "PluckerLine",
    "Triangle",
    "side",
    "TransversalKind",
    "transversals",
    "transversals_via_quadric",
]

__version__ = "0.1.0"
