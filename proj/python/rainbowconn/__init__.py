"""Rainbow connection of edge-colored graphs.

Vertices are 0-based ints, a graph's edges are kept in canonical order, and a
coloring is a list of color ids aligned with ``Graph.edges``.
"""

from ._rainbow import *  # noqa: F401,F403
from ._rainbow import DiameterViolation, Graph, ParseError  # noqa: F401

__version__ = "0.1.0"
