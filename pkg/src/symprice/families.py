"""Builders for the named digraph families.

Covers cycles, paths, complete digraphs, in-stars, backward tournaments,
the diameter equality family, L_k replacement sets, bags and the
extremal bag order selector k*.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .digraph import Digraph, canonical_form
from .errors import DomainError, SizeError
from . import formulas

B_FAMILY_ORDER_CAP = 8  # 2^(n-1) graphs before dedup


def cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"cycle needs n >= 2, got {n}")
    return Digraph.from_arrows(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Digraph.from_arrows(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"complete digraph needs n >= 1, got {n}")
    return Digraph.from_arrows(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def in_star(n: int) -> Digraph:
    """Star with all edges oriented towards the centre (vertex 0)."""
    if n < 2:
        raise ValueError(f"in-star needs n >= 2, got {n}")
    return Digraph.from_arrows(n, [(i, 0) for i in range(1, n)])


def backward_tournament(n: int) -> Digraph:
    """Forward hamiltonian path 0 -> 1 -> ... -> n-1 plus every back
    arrow (i, j) with j <= i-2."""
    if n < 3:
        raise ValueError(f"backward tournament needs n >= 3, got {n}")
    arrows = [(i, i + 1) for i in range(n - 1)]
    arrows += [(i, j) for i in range(2, n) for j in range(i - 1)]
    return Digraph.from_arrows(n, arrows)


def b_family(n: int, cap: int = B_FAMILY_ORDER_CAP) -> list[Digraph]:
    """All graphs built from the backward tournament by adding any subset
    of reversed path arrows (i+1, i), deduplicated by isomorphism."""
    if n < 3:
        raise ValueError(f"family needs n >= 3, got {n}")
    if n > cap:
        raise SizeError(f"family explodes beyond n={cap}, got {n}")
    base = backward_tournament(n)
    back = [(i + 1, i) for i in range(n - 1)]
    seen: dict[bytes, Digraph] = {}
    for r in range(n):
        for subset in combinations(back, r):
            g = base
            for u, v in subset:
                g = g.add_arrow(u, v)
            seen.setdefault(canonical_form(g), g)
    return list(seen.values())


def l_set(g: Digraph, k: int) -> list[Digraph]:
    """Non-isomorphic graphs obtained by replacing at most k arrows
    (u, v) by the reverse arrow (v, u) or by both arrows."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    arrows = list(g.arrows())
    seen: dict[bytes, Digraph] = {canonical_form(g): g}
    for r in range(1, min(k, len(arrows)) + 1):
        for subset in combinations(arrows, r):
            for choice in product(("reverse", "both"), repeat=r):
                h = g
                for (u, v), how in zip(subset, choice):
                    if how == "reverse":
                        h = h.remove_arrow(u, v)
                    h = h.add_arrow(v, u)
                seen.setdefault(canonical_form(h), h)
    return list(seen.values())


@dataclass(frozen=True)
class BagSpec:
    """A tournament of order k with one arrow duplicated and the copy
    replaced by a directed path of length n - k + 1."""

    n: int
    k: int
    tournament: Digraph
    dup_arrow: tuple[int, int]

    @property
    def path_len(self) -> int:
        return self.n - self.k + 1

    def __post_init__(self):
        if not 3 <= self.k < self.n:
            raise ValueError(f"need 3 <= k < n, got k={self.k}, n={self.n}")
        t = self.tournament
        if t.n != self.k:
            raise ValueError("tournament order must equal k")
        if not is_tournament(t):
            raise ValueError("core graph is not a tournament")
        u, v = self.dup_arrow
        if not t.has_arrow(u, v):
            raise ValueError(f"duplicated arrow ({u},{v}) not in tournament")


def is_tournament(g: Digraph) -> bool:
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (g.rows[i] >> j & 1) + (g.rows[j] >> i & 1) != 1:
                return False
    return True


def bag(spec: BagSpec) -> Digraph:
    """Vertices 0..k-1 carry the tournament; the duplicated arrow (u, v)
    is kept and a path u -> k -> k+1 -> ... -> n-1 -> v is added."""
    u, v = spec.dup_arrow
    arrows = list(spec.tournament.arrows())
    chain = [u] + list(range(spec.k, spec.n)) + [v]
    arrows += list(zip(chain, chain[1:]))
    return Digraph.from_arrows(spec.n, arrows)


def canonical_bag(n: int, k: int) -> Digraph:
    """The bag over the backward tournament of order k, duplicating its
    arrow (v_k, v_1)."""
    if not 3 <= k < n:
        raise ValueError(f"need 3 <= k < n, got k={k}, n={n}")
    return bag(BagSpec(n=n, k=k, tournament=backward_tournament(k), dup_arrow=(k - 1, 0)))


SQRT2 = math.sqrt(2.0)


def r_value(n: int) -> float:
    return n * (SQRT2 - 1.0) + 8.0 - 11.0 * SQRT2 / 2.0


def r_even(n: int) -> float:
    return 8.0 - n + math.sqrt(2.0 * n * n - 22.0 * n + 344.0 / 6.0)


def r_odd(n: int) -> float:
    return 8.0 - n + math.sqrt(2.0 * n * n - 22.0 * n + 326.0 / 6.0)


@dataclass(frozen=True)
class KStarResult:
    n: int
    r: float
    r_even: float
    r_odd: float
    candidates: tuple[int, ...]
    k_star: int
    pos_at_candidates: dict[int, int]


def k_star(n: int) -> KStarResult:
    """Extremal bag order: the candidate in {floor(r), ceil(r)} with the
    larger exact transmission price, ties towards the smaller k.

    The floats only locate the candidates; the comparison itself is done
    with exact integer closed forms.
    """
    if n < 11:
        raise DomainError(f"k* is defined for n >= 11, got {n}")
    r = r_value(n)
    lo = min(max(math.floor(r), 3), n - 1)
    hi = min(max(math.ceil(r), 3), n - 1)
    candidates = (lo,) if lo == hi else (lo, hi)
    pos = {k: formulas.pos_hnk(n, k) for k in candidates}
    best = max(candidates, key=lambda k: (pos[k], -k))
    return KStarResult(
        n=n,
        r=r,
        r_even=r_even(n),
        r_odd=r_odd(n),
        candidates=candidates,
        k_star=best,
        pos_at_candidates=pos,
    )


FAMILY_SPECS = ("cycle:n", "path:n", "complete:n", "instar:n", "backward:n", "bag:n:k")


def build_family(spec: str) -> Digraph:
    """Parse a CLI family specifier such as ``cycle:5`` or ``bag:8:4``."""
    parts = spec.split(":")
    name, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"non-integer parameter in family spec {spec!r}") from None
    builders = {
        "cycle": (1, cycle),
        "path": (1, path),
        "complete": (1, complete),
        "instar": (1, in_star),
        "backward": (1, backward_tournament),
        "bag": (2, canonical_bag),
    }
    if name not in builders:
        raise ValueError(f"unknown family {name!r}, expected one of {FAMILY_SPECS}")
    arity, fn = builders[name]
    if len(nums) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(nums)}")
    return fn(*nums)
