"""Planar clothespin motifs and clotheslines of them."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .complex import Point, SimplicialComplex, as_point, validate


def orientation(a: Sequence, b: Sequence, c: Sequence) -> int:
    """Sign of the turn a -> b -> c (1 left, -1 right, 0 collinear)."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (det > 0) - (det < 0)


def clothespin_interior(v1, v2, v3, v4) -> bool:
    """``v3`` lies strictly inside the triangle ``v1 v2 v4``."""
    o = orientation(v1, v2, v4)
    if o == 0:
        return False
    return (orientation(v1, v2, v3) == o and orientation(v2, v4, v3) == o
            and orientation(v4, v1, v3) == o)


def build_clothespin(v1, v2, v3, v4) -> SimplicialComplex:
    """Four planar points with edges [v1, v2] and [v3, v4].

    ``v3`` has to sit strictly inside ``conv{v1, v2, v4}``.
    """
    pts = [as_point(v) for v in (v1, v2, v3, v4)]
    if any(len(p) != 2 for p in pts):
        raise ValueError("clothespin vertices must be planar")
    if len(set(pts)) < 4:
        raise ValueError("clothespin vertices must be distinct")
    if orientation(pts[0], pts[1], pts[3]) == 0:
        raise ValueError("v1, v2, v4 are collinear")
    if not clothespin_interior(*pts):
        raise ValueError(f"v3={pts[2]} is not strictly inside the triangle v1 v2 v4")
    K = SimplicialComplex.build(pts, [(0, 1), (2, 3)])
    bad = validate(K)
    if bad:
        raise ValueError(f"clothespin not in general position: {bad[0].kind}")
    return K


def _rot90(u: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    return (-u[1], u[0])


def _motif(offset: Point, a, b) -> List[Point]:
    v3 = offset
    v2 = (v3[0] + a[0], v3[1] + a[1])
    v4 = (v3[0] + b[0], v3[1] + b[1])
    # v3 becomes the centroid of v1, v2, v4
    v1 = (v3[0] - a[0] - b[0], v3[1] - a[1] - b[1])
    return [v1, v2, v3, v4]


def build_clothesline(m: int, max_halvings: int = 40) -> SimplicialComplex:
    """``m`` translated clothespins with pairwise disjoint observability wedges.

    Motif ``i`` has its long arm along ``a_i = (m - i, i)``; the short arm is
    ``a_i`` turned by a small angle.  The angle is halved until the wedges are
    certified disjoint, then the offsets are nudged until the whole vertex set
    is in general position.
    """
    if m < 1:
        raise ValueError("a clothesline needs m >= 1 clothespins")
    from ..observability import regions_disjoint  # observability imports core

    arms = [(Fraction(m - i), Fraction(i)) for i in range(m)]
    spacing = Fraction(8 * m)
    eps = Fraction(1, 2)
    for _ in range(max_halvings):
        for jitter in range(1, 64):
            pts: List[Point] = []
            edges = []
            for i, a in enumerate(arms):
                r = _rot90(a)
                b = (a[0] + eps * r[0], a[1] + eps * r[1])
                offset = (spacing * i, Fraction(i * i * jitter, 7))
                base = len(pts)
                pts += _motif(offset, a, b)
                edges += [(base, base + 1), (base + 2, base + 3)]
            K = SimplicialComplex.build(pts, edges)
            if not validate(K):
                break
        else:
            raise ValueError("could not place clothespins in general position")
        if regions_disjoint(K):
            return K
        eps /= 2
    raise ValueError(f"wedges still overlap after {max_halvings} halvings")
