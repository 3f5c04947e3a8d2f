"""Simplex envelopes and necessary conditions for faithful concise sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .core import linalg
from .core.complex import Simplex, SimplicialComplex
from .filtration import Direction


@dataclass(frozen=True)
class HalfSpace:
    """``{p : normal . p >= offset}``."""

    normal: Tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise ValueError("half-space normal must be nonzero")

    def contains(self, p: Sequence[Fraction]) -> bool:
        return linalg.dot(self.normal, p) >= self.offset


@dataclass(frozen=True)
class Envelope:
    simplex: Simplex
    halfspaces: Tuple[HalfSpace, ...]
    dimension: int


def polyhedron_dimension(halfspaces: Sequence[HalfSpace], ambient_dim: Optional[int] = None) -> int:
    """Exact dimension of a nonempty intersection of closed half-spaces.

    Homogenize to the cone ``{(x, t) : a.x - b t >= 0, t >= 0}``.  A row is an
    implicit equality of that cone exactly when its negation is a nonnegative
    combination of the rows (Farkas), which :func:`linalg.nonnegative_combination`
    decides in exact arithmetic.  The dimension is ``d`` minus the rank of the
    implicit equalities.
    """
    if not halfspaces:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for an empty half-space list")
        return ambient_dim
    d = len(halfspaces[0].normal)
    rows = [tuple(h.normal) + (-h.offset,) for h in halfspaces]
    rows.append((Fraction(0),) * d + (Fraction(1),))
    implicit = []
    for r in rows[:-1]:
        target = tuple(-c for c in r)
        if linalg.nonnegative_combination(rows, target) is not None:
            implicit.append(r)
    return d - linalg.rank(implicit)


def envelope(K: SimplicialComplex, sigma: Sequence[int], S: Iterable[Direction]) -> Envelope:
    sigma = tuple(sorted(sigma))
    if sigma not in K.simplex_set:
        raise ValueError(f"{sigma} is not a simplex of the complex")
    S = list(dict.fromkeys(S))
    if not S:
        raise ValueError("envelope needs at least one direction")
    pts = K.points_of(sigma)
    hs = tuple(HalfSpace(s.vector, min(s.dot(p) for p in pts)) for s in S)
    return Envelope(sigma, hs, polyhedron_dimension(hs))


def perpendicular(s: Direction, points: Sequence[Sequence[Fraction]]) -> bool:
    """``s`` is orthogonal to the affine hull of ``points``."""
    base = points[0]
    return all(s.dot(linalg.sub(p, base)) == 0 for p in points[1:])


def _distinct_lines(dirs: Iterable[Direction]) -> int:
    lines = set()
    for s in dirs:
        key = s.ray
        neg = tuple(-x for x in key)
        lines.add(max(key, neg))
    return len(lines)


@dataclass
class SimplexCheck:
    simplex: Simplex
    dim: int
    envelope_dim: int
    perpendicular: int
    perpendicular_lines: int
    required: int
    envelope_ok: bool
    perpendicular_ok: bool
    independent_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.envelope_ok and self.perpendicular_ok and self.independent_ok is not False


@dataclass
class ConciseConditionReport:
    """Necessary (not sufficient) conditions for a faithful concise set."""

    ambient_dim: int
    n_directions: int
    size_ok: bool
    simplices: List[SimplexCheck] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return self.size_ok and all(c.ok for c in self.simplices)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "directions": self.n_directions,
            "size_ok": self.size_ok,
            "necessary_conditions_satisfied": self.satisfied,
            "note": "necessary conditions only; passing does not certify faithfulness",
            "simplices": [
                {
                    "simplex": list(c.simplex),
                    "dim": c.dim,
                    "envelope_dim": c.envelope_dim,
                    "envelope_ok": c.envelope_ok,
                    "perpendicular": c.perpendicular,
                    "perpendicular_lines": c.perpendicular_lines,
                    "required": c.required,
                    "perpendicular_ok": c.perpendicular_ok,
                    "pairwise_independent_ok": c.independent_ok,
                }
                for c in self.simplices
            ],
        }


def check_concise_conditions(K: SimplicialComplex, S: Iterable[Direction]) -> ConciseConditionReport:
    """Envelope, perpendicularity and cardinality conditions per maximal simplex.

    For each maximal k-simplex with k < d: its envelope must be k-dimensional,
    at least d - k + 1 directions must be perpendicular to it, and for
    k < d - 1 that many of them must be pairwise non-parallel.  Separately
    ``|S| >= d + 1``.
    """
    S = list(dict.fromkeys(S))
    d = K.ambient_dim
    report = ConciseConditionReport(d, len(S), len(S) >= d + 1)
    for sigma in K.maximal_simplices():
        k = len(sigma) - 1
        if k >= d:
            continue
        pts = K.points_of(sigma)
        perp = [s for s in S if perpendicular(s, pts)]
        lines = _distinct_lines(perp)
        need = d - k + 1
        env_dim = envelope(K, sigma, S).dimension if S else d
        report.simplices.append(SimplexCheck(
            simplex=sigma,
            dim=k,
            envelope_dim=env_dim,
            perpendicular=len(perp),
            perpendicular_lines=lines,
            required=need,
            envelope_ok=env_dim == k,
            perpendicular_ok=len(perp) >= need,
            independent_ok=(lines >= need) if k < d - 1 else None,
        ))
    return report
