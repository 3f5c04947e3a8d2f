"""Immersed simplicial complexes with exact rational vertex coordinates."""
from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from . import linalg

Point = Tuple[Fraction, ...]
Simplex = Tuple[int, ...]

DEFAULT_ENUMERATION_BUDGET = 2 ** 20

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class MalformedRational(ValueError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    pass


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Decimal strings and floats are rejected: they would silently introduce
    binary rounding.
    """
    if isinstance(value, bool):
        raise MalformedRational(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m:
            num, den = m.group(1), m.group(2)
            if den is not None and int(den) == 0:
                raise MalformedRational(f"zero denominator: {value!r}")
            return Fraction(int(num), int(den) if den else 1)
    raise MalformedRational(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_point(coords: Iterable) -> Point:
    return tuple(parse_rational(c) for c in coords)


def faces(simplex: Simplex) -> Iterator[Simplex]:
    """All nonempty proper faces."""
    for k in range(1, len(simplex)):
        yield from itertools.combinations(simplex, k)


def facets(simplex: Simplex) -> List[Simplex]:
    if len(simplex) == 1:
        return []
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def closure(simplices: Iterable[Iterable[int]]) -> FrozenSet[Simplex]:
    out = set()
    for s in simplices:
        s = tuple(sorted(set(s)))
        if not s:
            continue
        out.add(s)
        out.update(faces(s))
    return frozenset(out)


def _canonical_order(simplices: Iterable[Simplex]) -> Tuple[Simplex, ...]:
    return tuple(sorted(simplices, key=lambda s: (len(s), s)))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A complex immersed in R^d.

    ``vertex_coords`` may list more points than are used; the vertex set of
    the complex is its 0-simplices.  ``simplices`` is stored as given so that
    :func:`validate` can see malformed input; use :meth:`build` to obtain a
    closed, canonical complex.  Equality is geometric: two complexes are equal
    when they have the same simplices as point sets, regardless of indexing.
    """

    ambient_dim: int
    vertex_coords: Tuple[Point, ...]
    simplices: Tuple[Simplex, ...]

    @classmethod
    def build(cls, coords: Iterable[Iterable], simplices: Iterable[Iterable[int]] = (),
              ambient_dim: Optional[int] = None) -> "SimplicialComplex":
        pts = tuple(as_point(c) for c in coords)
        if ambient_dim is None:
            if not pts:
                raise ValueError("ambient_dim required for a complex without coordinates")
            ambient_dim = len(pts[0])
        return cls(ambient_dim, pts, _canonical_order(closure(simplices)))

    @classmethod
    def from_points(cls, coords: Iterable[Iterable], simplices: Iterable[Iterable[int]] = ()) -> "SimplicialComplex":
        """Every listed point becomes a vertex, plus the closure of ``simplices``."""
        pts = tuple(as_point(c) for c in coords)
        simplices = list(simplices) + [(i,) for i in range(len(pts))]
        return cls.build(pts, simplices, ambient_dim=len(pts[0]) if pts else None)

    @cached_property
    def simplex_set(self) -> FrozenSet[Simplex]:
        return frozenset(tuple(s) for s in self.simplices)

    @cached_property
    def _geometric_key(self):
        return (self.ambient_dim,
                frozenset(tuple(sorted(self.vertex_coords[i] for i in s)) for s in self.simplex_set))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._geometric_key == other._geometric_key

    def __hash__(self):
        return hash(self._geometric_key)

    def __repr__(self):
        return (f"SimplicialComplex(d={self.ambient_dim}, n={self.counts()}, "
                f"simplices={list(self.ordered())})")

    def ordered(self) -> Tuple[Simplex, ...]:
        return _canonical_order(self.simplex_set)

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplex_set), default=-1)

    def n(self, k: int) -> int:
        return sum(1 for s in self.simplex_set if len(s) == k + 1)

    def counts(self) -> Tuple[int, ...]:
        return tuple(self.n(k) for k in range(self.dim + 1))

    def __len__(self):
        return len(self.simplex_set)

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self.simplex_set

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(s[0] for s in self.simplex_set if len(s) == 1))

    def point(self, i: int) -> Point:
        return self.vertex_coords[i]

    def points_of(self, simplex: Simplex) -> List[Point]:
        return [self.vertex_coords[i] for i in simplex]

    def maximal_simplices(self) -> List[Simplex]:
        ss = self.simplex_set
        cofacet_of = set()
        for s in ss:
            cofacet_of.update(facets(s))
        return [s for s in self.ordered() if s not in cofacet_of]

    def with_simplices(self, simplices: Iterable[Simplex]) -> "SimplicialComplex":
        return SimplicialComplex(self.ambient_dim, self.vertex_coords, _canonical_order(set(simplices)))

    def compact(self) -> "SimplicialComplex":
        """Drop unused coordinates and renumber vertices in index order."""
        used = self.vertices
        remap = {old: new for new, old in enumerate(used)}
        coords = tuple(self.vertex_coords[i] for i in used)
        simplices = (tuple(remap[v] for v in s) for s in self.simplex_set)
        return SimplicialComplex(self.ambient_dim, coords, _canonical_order(simplices))


@dataclass(frozen=True)
class Violation:
    kind: str
    simplex: Tuple[int, ...]
    detail: str = ""


def validate(K: SimplicialComplex) -> List[Violation]:
    """Everything that keeps ``K`` from being a general-position complex.

    An empty list means ``K`` is face-closed and every set of at most d+1 of
    its vertices is affinely independent.
    """
    out: List[Violation] = []
    d = K.ambient_dim
    for i, p in enumerate(K.vertex_coords):
        if len(p) != d:
            out.append(Violation("coordinate-dimension", (i,), f"expected {d} coordinates, got {len(p)}"))
    seen = set()
    clean = []
    for raw in K.simplices:
        s = tuple(raw)
        if not s:
            out.append(Violation("empty-simplex", s))
            continue
        if len(set(s)) != len(s):
            out.append(Violation("repeated-vertex", s))
            continue
        if list(s) != sorted(s):
            out.append(Violation("unsorted-simplex", s))
            s = tuple(sorted(s))
        if any(v < 0 or v >= len(K.vertex_coords) for v in s):
            out.append(Violation("unknown-vertex", s))
            continue
        if s in seen:
            out.append(Violation("duplicate-simplex", s))
            continue
        seen.add(s)
        clean.append(s)
    for s in clean:
        for f in facets(s):
            if f not in seen:
                out.append(Violation("missing-face", f, f"face of {s}"))
    if any(v.kind == "coordinate-dimension" for v in out):
        return out
    for s in clean:
        if len(s) > d + 1:
            out.append(Violation("affine-dependence", s, "simplex has more than d+1 vertices"))
    vertex_ids = sorted({v for s in clean for v in s})
    dependent: List[FrozenSet[int]] = []
    for size in range(2, min(d + 1, len(vertex_ids)) + 1):
        for subset in itertools.combinations(vertex_ids, size):
            fs = frozenset(subset)
            if any(dep <= fs for dep in dependent):
                continue
            if not linalg.affinely_independent([K.vertex_coords[v] for v in subset]):
                dependent.append(fs)
                out.append(Violation("affine-dependence", subset, "general position violated"))
    return out


def _budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("FD_BUDGET")
    return int(env) if env else DEFAULT_ENUMERATION_BUDGET


def enumerate_subcomplexes(vertices: Sequence[Iterable], max_dim: int,
                           budget: Optional[int] = None) -> Iterator[SimplicialComplex]:
    """Yield every face-closed complex whose vertex set is exactly ``vertices``.

    Simplices have dimension at most ``max_dim``.  Raises
    :class:`EnumerationBudgetExceeded` if more than ``budget`` complexes would
    be produced; the edge layer alone is checked before anything is yielded.
    """
    pts = tuple(as_point(v) for v in vertices)
    n = len(pts)
    limit = _budget(budget)
    d = len(pts[0]) if pts else 0
    base = [(i,) for i in range(n)]
    if max_dim < 1 or n < 2:
        yield SimplicialComplex(d, pts, tuple(base))
        return
    n_edges = n * (n - 1) // 2
    if 2 ** n_edges > limit:
        raise EnumerationBudgetExceeded(
            f"{n} vertices give at least 2^{n_edges} complexes, budget is {limit}")
    count = 0

    def extend(current: FrozenSet[Simplex], k: int) -> Iterator[FrozenSet[Simplex]]:
        # choose any subset of the k-simplices whose facets are all present
        if k > max_dim:
            yield current
            return
        cands = [c for c in itertools.combinations(range(n), k + 1)
                 if all(f in current for f in facets(c))]
        if not cands:
            yield current
            return
        for mask in range(2 ** len(cands)):
            chosen = [c for b, c in enumerate(cands) if mask >> b & 1]
            yield from extend(current | frozenset(chosen), k + 1)

    for simplices in extend(frozenset(base), 1):
        count += 1
        if count > limit:
            raise EnumerationBudgetExceeded(f"more than {limit} complexes on {n} vertices")
        yield SimplicialComplex(d, pts, _canonical_order(simplices))


def barycentric_subdivide_edge(K: SimplicialComplex, tau: Sequence[int]) -> SimplicialComplex:
    """Split edge ``tau`` at its midpoint, together with every simplex containing it.

    The result has the same underlying point set as ``K``.  Only simplices of
    dimension at most two may contain ``tau``.
    """
    tau = tuple(sorted(tau))
    if len(tau) != 2 or tau not in K.simplex_set:
        raise ValueError(f"{tau} is not an edge of the complex")
    a, b = tau
    star = [s for s in K.simplex_set if a in s and b in s]
    if any(len(s) > 3 for s in star):
        raise ValueError("subdivision of an edge inside a simplex of dimension > 2 is not supported")
    mid = tuple((x + y) / 2 for x, y in zip(K.vertex_coords[a], K.vertex_coords[b]))
    m = len(K.vertex_coords)
    kept = [s for s in K.simplex_set if not (a in s and b in s)]
    new = []
    for s in star:
        rest = tuple(v for v in s if v not in tau)
        new += [rest + (a, m), rest + (b, m), rest + (m,)]
    return SimplicialComplex.build(K.vertex_coords + (mid,), kept + new, ambient_dim=K.ambient_dim)


def _in_simplex(points: Sequence[Point], x: Point) -> bool:
    base = points[0]
    diffs = [linalg.sub(p, base) for p in points[1:]]
    target = linalg.sub(x, base)
    if not diffs:
        return all(c == 0 for c in target)
    rows = [[diffs[j][i] for j in range(len(diffs))] for i in range(len(target))]
    lam = linalg.solve(rows, target)
    if lam is None:
        return False
    return all(c >= 0 for c in lam) and sum(lam) <= 1


def point_membership(K: SimplicialComplex, x: Iterable) -> bool:
    """True iff ``x`` lies in the closed geometric realization of ``K``."""
    x = as_point(x)
    if len(x) != K.ambient_dim:
        raise ValueError(f"point has {len(x)} coordinates, complex lives in R^{K.ambient_dim}")
    return any(_in_simplex(K.points_of(s), x) for s in K.maximal_simplices())
