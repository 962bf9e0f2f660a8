"""Graph invariants and the two price-of-symmetrisation functionals.

Supported invariants: diameter, domination number, transmission and
average distance.  Averages and quotients are exact ``Fraction`` values
so equality cases of the extremal statements stay decidable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .digraph import Digraph, iter_bits
from .distances import bfs_row_sum
from .errors import DomainError

INVARIANTS = ("diameter", "domination", "transmission", "average-distance")


def _eccentricity(g: Digraph, s: int) -> int:
    full = (1 << g.n) - 1
    seen = 1 << s
    frontier = seen
    depth = 0
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= g.rows[i]
        nxt &= full & ~seen
        if nxt:
            depth += 1
        seen |= nxt
        frontier = nxt
    if seen != full:
        raise DomainError(f"graph not strongly connected (seen from {s})")
    return depth


def diameter(g: Digraph) -> int:
    if g.n == 1:
        return 0
    return max(_eccentricity(g, s) for s in range(g.n))


def transmission(g: Digraph) -> int:
    """sigma(G): sum of all n(n-1) ordered-pair shortest-path lengths."""
    return sum(bfs_row_sum(g, s) for s in range(g.n))


def average_distance(g: Digraph) -> Fraction:
    if g.n < 2:
        raise DomainError("average distance needs n >= 2")
    return Fraction(transmission(g), g.n * (g.n - 1))


def domination_number(g: Digraph) -> int:
    """Exact minimum dominating set size.

    Vertex i dominates j iff the arrow (i, j) is present; members of the
    dominating set cover themselves.  Exhaustive search by increasing
    cardinality; fine for the n <= 12 orders used here.
    """
    full = (1 << g.n) - 1
    cover = [1 << v | g.rows[v] for v in range(g.n)]
    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            c = 0
            for v in subset:
                c |= cover[v]
            if c == full:
                return k
    raise AssertionError("unreachable: V always dominates")


def pos_sigma(g: Digraph) -> int:
    """sigma(G) - sigma of the symmetric closure; always >= 0."""
    return transmission(g) - transmission(g.symmetric_closure())


@dataclass(frozen=True)
class PriceReport:
    invariant: str
    value_g: Fraction
    value_sym: Fraction
    pos_minus: Fraction
    pos_quot: Fraction | None  # None only if the closure value is 0

    def to_json_obj(self) -> dict:
        def frac(x):
            return {"num": x.numerator, "den": x.denominator}

        return {
            "invariant": self.invariant,
            "value_g": frac(self.value_g),
            "value_sym": frac(self.value_sym),
            "pos_minus": frac(self.pos_minus),
            "pos_quot": frac(self.pos_quot) if self.pos_quot is not None else None,
        }


_FUNCS = {
    "diameter": diameter,
    "domination": domination_number,
    "transmission": transmission,
    "average-distance": average_distance,
}


def price(g: Digraph, invariant: str) -> PriceReport:
    if invariant not in _FUNCS:
        raise ValueError(f"unknown invariant {invariant!r}, expected one of {INVARIANTS}")
    f = _FUNCS[invariant]
    value_g = Fraction(f(g))
    value_sym = Fraction(f(g.symmetric_closure()))
    pos_quot = None if value_sym == 0 else value_g / value_sym
    return PriceReport(
        invariant=invariant,
        value_g=value_g,
        value_sym=value_sym,
        pos_minus=abs(value_g - value_sym),
        pos_quot=pos_quot,
    )
