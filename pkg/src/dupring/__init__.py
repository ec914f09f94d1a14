"""Finite and symbolic commutative rings, amalgamated duplications, and
checks of their ring-theoretic properties."""

__version__ = "0.1.0"

from .duplication import DupRing, duplicate, o1, o2
from .errors import DupRingError
from .ideals import ideal_from_generators, parse_generators, spectrum
from .rings import Element, Ring, make_ring

__all__ = [
    "DupRing",
    "DupRingError",
    "Element",
    "Ring",
    "duplicate",
    "ideal_from_generators",
    "make_ring",
    "o1",
    "o2",
    "parse_generators",
    "spectrum",
]
