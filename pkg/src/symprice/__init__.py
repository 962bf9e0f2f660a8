"""Price-of-symmetrisation toolkit for directed graphs."""

from .digraph import Digraph, are_isomorphic, canonical_form
from .invariants import (
    average_distance,
    diameter,
    domination_number,
    price,
    transmission,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "are_isomorphic",
    "canonical_form",
    "average_distance",
    "diameter",
    "domination_number",
    "price",
    "transmission",
    "__version__",
]
