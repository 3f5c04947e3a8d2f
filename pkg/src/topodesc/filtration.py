"""Lower-star filters, compatible index filters and sublevel complexes."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .core.complex import Simplex, SimplicialComplex, facets, format_rational, parse_rational
from .core import linalg


def _primitive(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    lcm = 1
    for c in vector:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in vector]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    return tuple(x // g for x in ints)


class Direction:
    """A nonzero rational vector standing for the ray it spans.

    Positive multiples compare equal and hash alike; lower-star orders do not
    see the scale.
    """

    __slots__ = ("vector", "_key")

    def __init__(self, components: Iterable):
        vec = tuple(parse_rational(c) for c in components)
        if not vec:
            raise ValueError("direction needs at least one component")
        if all(c == 0 for c in vec):
            raise ValueError("direction must be nonzero")
        object.__setattr__(self, "vector", vec)
        object.__setattr__(self, "_key", _primitive(vec))

    def __setattr__(self, name, value):
        raise AttributeError("Direction is immutable")

    @classmethod
    def parse(cls, text: str) -> "Direction":
        return cls(part for part in text.split(","))

    @classmethod
    def axis(cls, d: int, i: int, sign: int = 1) -> "Direction":
        return cls(sign if j == i else 0 for j in range(d))

    @property
    def dim(self) -> int:
        return len(self.vector)

    @property
    def ray(self) -> Tuple[int, ...]:
        """Primitive integer representative of the ray."""
        return self._key

    def dot(self, point: Sequence[Fraction]) -> Fraction:
        return linalg.dot(self.vector, point)

    def __neg__(self) -> "Direction":
        return Direction(-c for c in self.vector)

    def __eq__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(("Direction", self._key))

    def __lt__(self, other: "Direction"):
        return self._key < other._key

    def __repr__(self):
        return f"Direction({','.join(format_rational(c) for c in self.vector)})"

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.vector]


def axis_directions(d: int) -> List[Direction]:
    return [Direction.axis(d, i, 1) for i in range(d)]


@dataclass(frozen=True)
class FilterAssignment:
    complex: SimplicialComplex
    values: Mapping[Simplex, Fraction]

    def __call__(self, simplex: Simplex) -> Fraction:
        return self.values[simplex]

    @cached_property
    def heights(self) -> Tuple[Fraction, ...]:
        """Distinct filter values in increasing order."""
        return tuple(sorted(set(self.values.values())))

    def is_monotone(self) -> bool:
        return all(self.values[f] <= v for s, v in self.values.items() for f in facets(s))


def lower_star(K: SimplicialComplex, s: Direction) -> FilterAssignment:
    """Each simplex gets the largest height ``s . v`` among its vertices."""
    if s.dim != K.ambient_dim:
        raise ValueError(f"direction has dimension {s.dim}, complex lives in R^{K.ambient_dim}")
    vheight = {v: s.dot(K.vertex_coords[v]) for v in K.vertices}
    return FilterAssignment(K, {simp: max(vheight[v] for v in simp) for simp in K.simplex_set})


TieRule = Callable[[List[Simplex]], List[Simplex]]


def default_tie_rule(group: List[Simplex]) -> List[Simplex]:
    """Lower dimension first, then lexicographic vertex list."""
    return sorted(group, key=lambda s: (len(s), s))


def random_tie_rule(rng: random.Random) -> TieRule:
    """Uniformly random face-respecting order within each height class."""

    def rule(group: List[Simplex]) -> List[Simplex]:
        remaining = set(group)
        out: List[Simplex] = []
        while remaining:
            ready = sorted(s for s in remaining if not any(f in remaining for f in facets(s)))
            pick = rng.choice(ready)
            out.append(pick)
            remaining.remove(pick)
        return out

    return rule


@dataclass(frozen=True)
class IndexFilter:
    source: FilterAssignment
    order: Tuple[Simplex, ...]

    @cached_property
    def position(self) -> Dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.order)}

    def is_compatible(self) -> bool:
        pos = self.position
        f = self.source.values
        if set(self.order) != set(f) or len(self.order) != len(f):
            return False
        for s in self.order:
            if any(pos[t] > pos[s] for t in facets(s)):
                return False
        heights = [f[s] for s in self.order]
        return all(a <= b for a, b in zip(heights, heights[1:]))


def index_filter(f: FilterAssignment, tie_rule: Optional[TieRule] = None) -> IndexFilter:
    if not f.is_monotone():
        raise ValueError("filter is not monotone")
    rule = tie_rule or default_tie_rule
    groups: Dict[Fraction, List[Simplex]] = {}
    for s, v in f.values.items():
        groups.setdefault(v, []).append(s)
    order: List[Simplex] = []
    for h in sorted(groups):
        order.extend(rule(sorted(groups[h])))
    out = IndexFilter(f, tuple(order))
    if not out.is_compatible():
        raise ValueError("tie rule produced an order that is not compatible with the filter")
    return out


def sublevel(f: FilterAssignment, t) -> SimplicialComplex:
    t = parse_rational(t) if not isinstance(t, (Fraction, float)) else t
    return f.complex.with_simplices(s for s, v in f.values.items() if v <= t)
