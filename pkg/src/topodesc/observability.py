"""Exact arcs of directions on the circle and clothespin observability regions.

No angle is ever evaluated numerically.  Directions are rational vectors,
every "alpha +- pi/2" boundary is a quarter-turn of an edge vector, and
angular order comes from cross- and dot-product signs.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .core.complex import Point, SimplicialComplex, as_point
from .filtration import Direction

Vec = Tuple[Fraction, ...]


def cross(a: Sequence, b: Sequence) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def rot_ccw(u: Sequence) -> Vec:
    """Quarter turn counter-clockwise (angle + pi/2)."""
    return (-u[1], u[0])


def rot_cw(u: Sequence) -> Vec:
    """Quarter turn clockwise (angle - pi/2)."""
    return (u[1], -u[0])


def _half(v: Sequence) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_cmp(u: Sequence, v: Sequence) -> int:
    """Compare the angles of ``u`` and ``v`` in ``[0, 2 pi)``."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _relative(a: Sequence, u: Sequence) -> Vec:
    # rotate and scale so that a lands on the positive x-axis
    return (_dot(a, u), cross(a, u))


def ccw_cmp_from(a: Sequence, u: Sequence, v: Sequence) -> int:
    """Compare counter-clockwise angles from ``a`` to ``u`` and from ``a`` to ``v``."""
    return angle_cmp(_relative(a, u), _relative(a, v))


def same_ray(u: Sequence, v: Sequence) -> bool:
    return cross(u, v) == 0 and _dot(u, v) > 0


def _vec(x) -> Vec:
    if isinstance(x, Direction):
        if x.dim != 2:
            raise ValueError("observability regions live on S^1; need a planar direction")
        return x.vector
    v = as_point(x)
    if len(v) != 2 or v == (0, 0):
        raise ValueError(f"not a nonzero planar vector: {x!r}")
    return v


def _interior_ray(a: Vec, b: Vec) -> Vec:
    """A ray strictly inside the counter-clockwise arc from ``a`` to ``b``."""
    if same_ray(a, b):
        return rot_ccw(a)
    if cross(a, b) > 0:
        # any positive combination is strictly inside; weighting by the other
        # vector's L1 norm keeps it roughly central
        la = abs(a[0]) + abs(a[1])
        lb = abs(b[0]) + abs(b[1])
        return (a[0] * lb + b[0] * la, a[1] * lb + b[1] * la)
    # arc of at least pi: the quarter-turn of a is inside
    return rot_ccw(a)


@dataclass(frozen=True)
class Arc:
    """Counter-clockwise arc from ``start`` to ``end``.

    ``start == end`` with both ends closed is a single ray.
    """

    start: Vec
    end: Vec
    start_closed: bool
    end_closed: bool

    def is_point(self) -> bool:
        return same_ray(self.start, self.end)

    def contains(self, s: Sequence) -> bool:
        if same_ray(s, self.start):
            return self.start_closed
        if same_ray(s, self.end):
            return self.end_closed
        if self.is_point():
            return False
        return ccw_cmp_from(self.start, s, self.end) < 0

    def width_cmp(self, other: "Arc") -> int:
        """Compare angular widths exactly."""
        return angle_cmp(_relative(self.start, self.end), _relative(other.start, other.end))

    def to_json(self) -> dict:
        return {
            "start": Direction(self.start).to_json(),
            "end": Direction(self.end).to_json(),
            "start_closed": self.start_closed,
            "end_closed": self.end_closed,
        }


def _sort_rays(rays: Iterable[Sequence]) -> List[Vec]:
    uniq: List[Vec] = []
    for r in rays:
        r = _vec(r)
        if not any(same_ray(r, u) for u in uniq):
            uniq.append(r)
    return sorted(uniq, key=cmp_to_key(angle_cmp))


@dataclass(frozen=True)
class CircularRegion:
    """Finite union of pairwise disjoint arcs (or the whole circle)."""

    arcs: Tuple[Arc, ...]
    full: bool = False

    @classmethod
    def from_predicate(cls, member: Callable[[Vec], bool], rays: Iterable[Sequence]) -> "CircularRegion":
        """Canonical region of a set whose membership can only change at ``rays``."""
        bps = _sort_rays(rays)
        if not bps:
            probe = (Fraction(1), Fraction(0))
            return cls((), full=member(probe))
        n = len(bps)
        # cyclic sequence: breakpoint k, then gap (k, k+1)
        cells: List[Tuple[str, int, bool]] = []
        for k in range(n):
            cells.append(("ray", k, member(bps[k])))
            cells.append(("gap", k, member(_interior_ray(bps[k], bps[(k + 1) % n]))))
        if all(c[2] for c in cells):
            return cls((), full=True)
        first_out = next(i for i, c in enumerate(cells) if not c[2])
        cells = cells[first_out:] + cells[:first_out]
        arcs: List[Arc] = []
        run: List[Tuple[str, int, bool]] = []
        for c in cells + [("end", -1, False)]:
            if c[2]:
                run.append(c)
                continue
            if run:
                a, b = run[0], run[-1]
                start = bps[a[1]]
                start_closed = a[0] == "ray"
                if b[0] == "ray":
                    end, end_closed = bps[b[1]], True
                else:
                    end, end_closed = bps[(b[1] + 1) % n], False
                arcs.append(Arc(start, end, start_closed, end_closed))
                run = []
        arcs.sort(key=cmp_to_key(lambda x, y: angle_cmp(x.start, y.start)))
        return cls(tuple(arcs))

    def contains(self, s) -> bool:
        s = _vec(s)
        return self.full or any(a.contains(s) for a in self.arcs)

    __contains__ = contains

    @property
    def boundary_rays(self) -> List[Vec]:
        return [r for a in self.arcs for r in (a.start, a.end)]

    def is_empty(self) -> bool:
        return not self.full and not self.arcs

    def union(self, other: "CircularRegion") -> "CircularRegion":
        return CircularRegion.from_predicate(lambda s: self.contains(s) or other.contains(s),
                                             self.boundary_rays + other.boundary_rays)

    def intersection(self, other: "CircularRegion") -> "CircularRegion":
        return CircularRegion.from_predicate(lambda s: self.contains(s) and other.contains(s),
                                             self.boundary_rays + other.boundary_rays)

    def closure(self) -> "CircularRegion":
        ends = self.boundary_rays
        return CircularRegion.from_predicate(
            lambda s: self.contains(s) or any(same_ray(s, e) for e in ends), ends)

    def subset_of(self, other: "CircularRegion") -> bool:
        return self.intersection(other) == self

    def disjoint(self, other: "CircularRegion") -> bool:
        return self.intersection(other).is_empty()

    def __eq__(self, other):
        if not isinstance(other, CircularRegion):
            return NotImplemented
        if self.full or other.full:
            return self.full == other.full
        if len(self.arcs) != len(other.arcs):
            return False
        return all(same_ray(a.start, b.start) and same_ray(a.end, b.end)
                   and a.start_closed == b.start_closed and a.end_closed == b.end_closed
                   for a, b in zip(self.arcs, other.arcs))

    def __hash__(self):
        return hash((self.full, len(self.arcs)))

    def to_json(self) -> dict:
        return {"full": self.full, "arcs": [a.to_json() for a in self.arcs]}


def birth_interval(v1, v2) -> CircularRegion:
    """Directions in which ``v1`` lies strictly below ``v2``.

    For an isolated edge ``[v1, v2]`` these are exactly the directions where
    ``v1`` gives a birth with positive lifespan rather than an instantaneous
    point: the open half-circle centred on ``v2 - v1``.
    """
    v1, v2 = as_point(v1), as_point(v2)
    if v1 == v2:
        raise ValueError("coincident points")
    u = (v2[0] - v1[0], v2[1] - v1[1])
    return CircularRegion((Arc(rot_cw(u), rot_ccw(u), False, False),))


def _xor_region(a: CircularRegion, b: CircularRegion) -> CircularRegion:
    return CircularRegion.from_predicate(lambda s: a.contains(s) != b.contains(s),
                                         a.boundary_rays + b.boundary_rays)


@dataclass(frozen=True)
class ClothespinRegions:
    R1: CircularRegion
    R2: CircularRegion
    R3: CircularRegion
    R4: CircularRegion
    W: CircularRegion

    @property
    def R(self) -> Tuple[CircularRegion, ...]:
        return (self.R1, self.R2, self.R3, self.R4)

    def to_json(self) -> dict:
        return {name: getattr(self, name).to_json() for name in ("R1", "R2", "R3", "R4", "W")}


# edge partners of each vertex in the clothespin and in its edge-swapped twin
_PARTNER = {0: 1, 1: 0, 2: 3, 3: 2}
_SWAPPED_PARTNER = {0: 3, 3: 0, 1: 2, 2: 1}


def clothespin_vertices(K: SimplicialComplex) -> Tuple[Point, Point, Point, Point]:
    """``(v1, v2, v3, v4)`` of a clothespin built by :func:`build_clothespin`."""
    if K.ambient_dim != 2 or len(K.vertices) != 4:
        raise ValueError("not a clothespin: need four vertices in the plane")
    vs = K.vertices
    edges = sorted(s for s in K.simplex_set if len(s) == 2)
    if edges != [(vs[0], vs[1]), (vs[2], vs[3])] or K.dim != 1:
        raise ValueError("not a clothespin: edges must be [v1,v2] and [v3,v4]")
    pts = tuple(K.vertex_coords[v] for v in vs)
    from .core.constructions import clothespin_interior
    if not clothespin_interior(*pts):
        raise ValueError("not a clothespin: v3 is not interior to conv{v1, v2, v4}")
    return pts


def swapped_clothespin(K: SimplicialComplex) -> SimplicialComplex:
    """Same vertices, edges [v1, v4] and [v2, v3]."""
    v = clothespin_vertices(K)
    return SimplicialComplex.build(v, [(0, 3), (1, 2)])


def clothespin_regions(K: SimplicialComplex) -> ClothespinRegions:
    """Per-vertex regions where the event type differs between K and its twin.

    Each ``R_i`` is the symmetric difference of the birth intervals of ``v_i``
    against its partner in K and in the twin.  ``W`` is the closed pair of arcs
    spanned by the quarter-turns of ``v2 - v3`` and ``v4 - v3``.
    """
    v = clothespin_vertices(K)
    regions = []
    for i in range(4):
        regions.append(_xor_region(birth_interval(v[i], v[_PARTNER[i]]),
                                   birth_interval(v[i], v[_SWAPPED_PARTNER[i]])))
    return ClothespinRegions(*regions, W=wedge_region(v[1], v[2], v[3]))


def wedge_region(v2, v3, v4) -> CircularRegion:
    """Closed arcs between the quarter-turns of ``v2 - v3`` and ``v4 - v3``.

    Both arcs span the angle at ``v3``; one is the antipode of the other.
    """
    v2, v3, v4 = as_point(v2), as_point(v3), as_point(v4)
    a = (v2[0] - v3[0], v2[1] - v3[1])
    b = (v4[0] - v3[0], v4[1] - v3[1])
    if cross(a, b) == 0:
        raise ValueError("degenerate wedge")
    if cross(a, b) < 0:
        a, b = b, a
    # a -> b counter-clockwise spans the angle at v3 (< pi)
    arcs = [Arc(rot_cw(a), rot_cw(b), True, True), Arc(rot_ccw(a), rot_ccw(b), True, True)]
    return CircularRegion.from_predicate(lambda s: any(x.contains(s) for x in arcs),
                                         [r for x in arcs for r in (x.start, x.end)])


def motif_vertices(K: SimplicialComplex) -> List[Tuple[Point, Point, Point, Point]]:
    """Split a clothesline into its clothespins, four consecutive vertices each."""
    vs = K.vertices
    if K.ambient_dim != 2 or len(vs) % 4 or not vs:
        raise ValueError("malformed clothesline: vertex count must be a positive multiple of 4")
    edges = sorted(s for s in K.simplex_set if len(s) == 2)
    expected = []
    for i in range(0, len(vs), 4):
        expected += [(vs[i], vs[i + 1]), (vs[i + 2], vs[i + 3])]
    if edges != sorted(expected) or K.dim != 1:
        raise ValueError("malformed clothesline: edges must be [v1,v2],[v3,v4] per motif")
    return [tuple(K.vertex_coords[v] for v in vs[i:i + 4]) for i in range(0, len(vs), 4)]


def clothesline_regions(K: SimplicialComplex) -> List[CircularRegion]:
    return [wedge_region(v2, v3, v4) for _, v2, v3, v4 in motif_vertices(K)]


def regions_disjoint(clothesline: SimplicialComplex) -> bool:
    regions = clothesline_regions(clothesline)
    return all(regions[i].disjoint(regions[j])
               for i in range(len(regions)) for j in range(i + 1, len(regions)))


def swap_adversaries(clothesline: SimplicialComplex) -> List[SimplicialComplex]:
    """One complex per motif, with that motif's edges swapped to [v1,v4],[v2,v3]."""
    motif_vertices(clothesline)
    vs = clothesline.vertices
    base = [s for s in clothesline.simplex_set if len(s) == 2]
    out = []
    for i in range(0, len(vs), 4):
        a, b, c, d = vs[i:i + 4]
        edges = [e for e in base if e not in ((a, b), (c, d))] + [(a, d), (b, c)]
        out.append(SimplicialComplex.build(clothesline.vertex_coords, edges + [(v,) for v in vs],
                                           ambient_dim=2))
    return out


@dataclass(frozen=True)
class HittingResult:
    satisfied: bool
    uncovered: Tuple[int, ...]


def hitting_lower_bound(clothesline: SimplicialComplex, S: Iterable[Direction]) -> HittingResult:
    """Does ``S`` put a direction in every region of observability?

    Regions are pairwise disjoint, so a yes forces ``|S| >= m``.
    """
    regions = clothesline_regions(clothesline)
    S = [_vec(s) for s in S]
    uncovered = tuple(i for i, r in enumerate(regions) if not any(r.contains(s) for s in S))
    return HittingResult(not uncovered, uncovered)


def interior_direction(arc: Arc) -> Direction:
    """An exact rational direction strictly inside ``arc``."""
    return Direction(_interior_ray(arc.start, arc.end))


def generic_interior_direction(arc: Arc, K: SimplicialComplex, max_tries: int = 64) -> Direction:
    """A direction strictly inside ``arc`` at which no two vertices of ``K`` tie.

    The middle of a wedge can sit exactly on a tie ray (a motif whose arms have
    equal L1 norm puts v1 and v3 level at the midpoint), where the swapped
    twins have equal diagrams.  Tie rays are finitely many, so halving toward
    the start of the arc escapes them.
    """
    pts = [K.vertex_coords[v] for v in K.vertices]
    diffs = [(p[0] - q[0], p[1] - q[1]) for p, q in itertools.combinations(pts, 2)]
    lo, hi = arc.start, arc.end
    for _ in range(max_tries):
        s = _interior_ray(lo, hi)
        if all(_dot(s, d) != 0 for d in diffs):
            return Direction(s)
        hi = s
    raise ValueError("no tie-free direction found inside arc")


def arc_angles(arc: Arc) -> Tuple[float, float]:
    """Float angles for drawing only."""
    a0 = math.atan2(float(arc.start[1]), float(arc.start[0]))
    a1 = math.atan2(float(arc.end[1]), float(arc.end[0]))
    while a1 < a0:
        a1 += 2 * math.pi
    return a0, a1


def regions_svg(regions: Dict[str, CircularRegion], size: int = 240) -> str:
    """Unit circle with each region's arcs drawn as shaded wedges."""
    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]
    c = size / 2
    r = size * 0.4
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             f'<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="1"/>']
    for n, (name, region) in enumerate(regions.items()):
        color = palette[n % len(palette)]
        arcs = region.arcs if not region.full else [Arc((1, 0), (1, 0), True, True)]
        for arc in arcs:
            a0, a1 = arc_angles(arc) if not region.full else (0.0, 2 * math.pi - 1e-6)
            if a1 - a0 < 1e-9:
                x, y = c + r * math.cos(a0), c - r * math.sin(a0)
                parts.append(f'<line x1="{c}" y1="{c}" x2="{x:.3f}" y2="{y:.3f}" stroke="{color}"/>')
                continue
            x0, y0 = c + r * math.cos(a0), c - r * math.sin(a0)
            x1, y1 = c + r * math.cos(a1), c - r * math.sin(a1)
            large = 1 if a1 - a0 > math.pi else 0
            parts.append(f'<path d="M {c} {c} L {x0:.3f} {y0:.3f} A {r} {r} 0 {large} 0 {x1:.3f} {y1:.3f} Z" '
                         f'fill="{color}" fill-opacity="0.35" stroke="{color}"><title>{name}</title></path>')
    parts.append("</svg>")
    return "\n".join(parts)
