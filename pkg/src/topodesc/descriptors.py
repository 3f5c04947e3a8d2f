"""The descriptor types and their normalized, exactly comparable values."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .core.complex import Point, SimplicialComplex, as_point, point_membership
from .filtration import Direction, FilterAssignment, TieRule, index_filter, lower_star, sublevel
from .persistence import INF, Pairing, betti_numbers, reduce


class DescriptorType(enum.Enum):
    PD = "pd"
    APD = "apd"
    BC = "bc"
    ABC = "abc"
    ECC = "ecc"
    AECC = "aecc"
    DV = "dv"
    D0 = "d0"
    DR = "dr"

    @property
    def parameter_kind(self) -> str:
        return "point" if self is DescriptorType.DR else "direction"

    @property
    def verbose(self) -> bool:
        return self in (DescriptorType.APD, DescriptorType.ABC, DescriptorType.AECC)

    @classmethod
    def parse(cls, name: Union[str, "DescriptorType"]) -> "DescriptorType":
        if isinstance(name, DescriptorType):
            return name
        key = name.strip().lower().replace("_", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown descriptor {name!r}")


Parameter = Union[Direction, Point]


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of ``(degree, birth, death)``, stored sorted.

    ``death`` is ``math.inf`` for essential classes.
    """

    points: Tuple[Tuple[int, Fraction, Any], ...]
    verbose: bool

    @classmethod
    def from_points(cls, points: Iterable[Tuple[int, Fraction, Any]], verbose: bool) -> "PersistenceDiagram":
        pts = tuple(sorted(((int(k), Fraction(b), d if d == INF else Fraction(d)) for k, b, d in points),
                           key=lambda p: (p[0], p[1], p[2])))
        for k, b, d in pts:
            if b > d:
                raise ValueError(f"birth {b} after death {d}")
            if not verbose and b == d:
                raise ValueError("concise diagrams carry no diagonal points")
        return cls(pts, verbose)

    def degree(self, k: int) -> Counter:
        return Counter((b, d) for kk, b, d in self.points if kk == k)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({k for k, _, _ in self.points}))


@dataclass(frozen=True)
class StepFunction:
    """Right-continuous integer step function, zero before the first event.

    ``events`` holds ``(height, value)`` change points only, so two equal
    functions have equal event lists.
    """

    events: Tuple[Tuple[Fraction, Tuple[int, ...]], ...]
    width: int

    @classmethod
    def from_samples(cls, samples: Iterable[Tuple[Fraction, Sequence[int]]], width: int) -> "StepFunction":
        events = []
        prev = (0,) * width
        last = None
        for h, v in sorted(samples, key=lambda e: e[0]):
            v = tuple(int(x) for x in v)
            if len(v) != width:
                raise ValueError(f"value {v} does not have width {width}")
            if last is not None and h == last:
                raise ValueError(f"two samples at height {h}")
            last = h
            if v != prev:
                events.append((Fraction(h), v))
                prev = v
        return cls(tuple(events), width)

    def __call__(self, t) -> Tuple[int, ...]:
        value = (0,) * self.width
        for h, v in self.events:
            if h <= t:
                value = v
            else:
                break
        return value

    @property
    def heights(self) -> Tuple[Fraction, ...]:
        return tuple(h for h, _ in self.events)

    def is_zero(self) -> bool:
        return not self.events


# per-degree families: tuple of (degree, StepFunction), zero functions omitted
StepFamily = Tuple[Tuple[int, StepFunction], ...]


def step_family(funcs: Dict[int, StepFunction]) -> StepFamily:
    return tuple((k, fn) for k, fn in sorted(funcs.items()) if not fn.is_zero())


@dataclass(frozen=True)
class DescriptorValue:
    kind: DescriptorType
    payload: Any


def _check_kind(D: DescriptorType, p) -> None:
    if D.parameter_kind == "direction" and not isinstance(p, Direction):
        raise TypeError(f"{D.name} is parameterized by directions, got {p!r}")
    if D.parameter_kind == "point" and isinstance(p, Direction):
        raise TypeError(f"{D.name} is parameterized by points, got a direction")


@dataclass(frozen=True)
class _Filtered:
    f: FilterAssignment
    pairing: Pairing


def _filtered(K: SimplicialComplex, s: Direction, tie_rule: Optional[TieRule]) -> _Filtered:
    f = lower_star(K, s)
    return _Filtered(f, reduce(K, index_filter(f, tie_rule)))


def _apd(fl: _Filtered) -> PersistenceDiagram:
    f, pr = fl.f.values, fl.pairing
    pts = [(len(pr.order[i]) - 1, f[pr.order[i]], f[pr.order[j]]) for i, j in pr.pairs]
    pts += [(len(pr.order[i]) - 1, f[pr.order[i]], INF) for i in pr.essential]
    return PersistenceDiagram.from_points(pts, verbose=True)


def _cumulative(f: FilterAssignment, key) -> Dict[Any, StepFunction]:
    """Cumulative counts per ``key(simplex) -> (group, slot)`` over heights."""
    per_height: Dict[Any, Dict[Fraction, List[int]]] = {}
    for s, h in f.values.items():
        kk = key(s)
        if kk is None:
            continue
        group, slot = kk
        per_height.setdefault(group, {}).setdefault(h, [0, 0])[slot] += 1
    out = {}
    for group, table in per_height.items():
        run = [0, 0]
        samples = []
        for h in sorted(table):
            run = [run[0] + table[h][0], run[1] + table[h][1]]
            samples.append((h, tuple(run)))
        out[group] = StepFunction.from_samples(samples, 2)
    return out


def _abc(fl: _Filtered) -> StepFamily:
    signs = fl.pairing.signs
    return step_family(_cumulative(fl.f, lambda s: (signs[s][1], 0 if signs[s][0] == "positive" else 1)))


def _aecc(f: FilterAssignment) -> StepFunction:
    fam = _cumulative(f, lambda s: (0, (len(s) - 1) % 2))
    return fam.get(0, StepFunction((), 2))


def _bc(f: FilterAssignment) -> StepFamily:
    degrees = range(f.complex.dim + 1)
    samples: Dict[int, List] = {k: [] for k in degrees}
    for h in f.heights:
        betti = betti_numbers(sublevel(f, h))
        for k in degrees:
            samples[k].append((h, (betti.get(k, 0),)))
    return step_family({k: StepFunction.from_samples(v, 1) for k, v in samples.items()})


def _ecc(f: FilterAssignment) -> StepFunction:
    samples = []
    for h in f.heights:
        chi = sum((-1) ** ((len(s) - 1) % 2) for s, v in f.values.items() if v <= h)
        samples.append((h, (chi,)))
    return StepFunction.from_samples(samples, 1)


def _dv(K: SimplicialComplex, s: Direction):
    verts = K.vertices
    if not verts:
        return ((), 0)
    heights = {v: s.dot(K.vertex_coords[v]) for v in verts}
    low = min(heights.values())
    lowest = tuple(sorted(K.vertex_coords[v] for v in verts if heights[v] == low))
    return (lowest, len(verts))


def compute(D: Union[DescriptorType, str], K: SimplicialComplex, p: Parameter,
            tie_rule: Optional[TieRule] = None) -> DescriptorValue:
    """Descriptor of type ``D`` for ``K`` filtered by parameter ``p``.

    ``tie_rule`` picks the compatible index filter for the verbose types; the
    result does not depend on it.
    """
    D = DescriptorType.parse(D)
    if D is DescriptorType.DR and not isinstance(p, Direction):
        p = as_point(p)
    _check_kind(D, p)
    if D is DescriptorType.DR:
        return DescriptorValue(D, int(point_membership(K, p)))
    if p.dim != K.ambient_dim:
        raise ValueError(f"direction has dimension {p.dim}, complex lives in R^{K.ambient_dim}")
    if D is DescriptorType.D0:
        return DescriptorValue(D, 0)
    if D is DescriptorType.DV:
        return DescriptorValue(D, _dv(K, p))
    if D is DescriptorType.ECC:
        return DescriptorValue(D, _ecc(lower_star(K, p)))
    if D is DescriptorType.AECC:
        return DescriptorValue(D, _aecc(lower_star(K, p)))
    if D is DescriptorType.BC:
        return DescriptorValue(D, _bc(lower_star(K, p)))
    fl = _filtered(K, p, tie_rule)
    if D is DescriptorType.ABC:
        return DescriptorValue(D, _abc(fl))
    apd = _apd(fl)
    if D is DescriptorType.APD:
        return DescriptorValue(D, apd)
    return DescriptorValue(D, PersistenceDiagram.from_points(
        [pt for pt in apd.points if pt[1] != pt[2]], verbose=False))


def equal(a: DescriptorValue, b: DescriptorValue) -> bool:
    if a.kind is not b.kind:
        raise TypeError(f"cannot compare {a.kind.name} with {b.kind.name}")
    return a.payload == b.payload


def descriptor_set(D: Union[DescriptorType, str], K: SimplicialComplex,
                   P: Iterable[Parameter]) -> List[Tuple[Parameter, DescriptorValue]]:
    return [(p, compute(D, K, p)) for p in P]
