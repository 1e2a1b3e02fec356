"""Exact computation in Thompson's groups F, F' and D.

Elements are piecewise-linear homeomorphisms with dyadic breakpoints, held
exactly; words over the various generating sets are realized as such maps,
which decides the word problem for every presentation handled here.
"""

from .dyadic import Dyadic
from .plmap import REAL, UNIT, Interval, PLMap, PLMapError, identity, support, membership
from .words import GenSym, Presentation, Word, WordError, realize, is_identity, relators_for

__version__ = "0.1.0"

__all__ = [
    "Dyadic",
    "PLMap",
    "PLMapError",
    "Interval",
    "UNIT",
    "REAL",
    "identity",
    "support",
    "membership",
    "GenSym",
    "Word",
    "WordError",
    "Presentation",
    "realize",
    "is_identity",
    "relators_for",
]
