"""Faithfulness relative to finite adversary universes.

The true question (is a parameter set faithful against every complex in R^d?)
is out of reach; everything here is relative to an explicit finite universe
and a finite candidate pool, and the reports say so.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .core.complex import (
    SimplicialComplex,
    as_point,
    enumerate_subcomplexes,
    _budget,
)
from .descriptors import DescriptorType, DescriptorValue, Parameter, compute
from .filtration import Direction, axis_directions

RELATIVE_NOTE = ("relative to the listed candidates and adversary universe; "
                 "filtrations are lower-star by direction (points for dr)")


@dataclass(frozen=True)
class AdversaryUniverse:
    complexes: Tuple[SimplicialComplex, ...]
    provenance: str = "explicit"

    def __post_init__(self):
        dims = {K.ambient_dim for K in self.complexes}
        if len(dims) > 1:
            raise ValueError(f"universe mixes ambient dimensions {sorted(dims)}")
        if len(set(self.complexes)) != len(self.complexes):
            raise ValueError("universe lists a complex twice")

    @classmethod
    def explicit(cls, complexes: Iterable[SimplicialComplex]) -> "AdversaryUniverse":
        """Keep the first copy of each geometrically distinct complex."""
        seen = {}
        for K in complexes:
            seen.setdefault(K, K)
        return cls(tuple(seen.values()), "explicit")

    @classmethod
    def on_vertices(cls, points: Sequence[Iterable], max_dim: int,
                    subsets: bool = False, budget: Optional[int] = None) -> "AdversaryUniverse":
        """Every complex on exactly ``points``, or on each nonempty subset of them."""
        pts = [as_point(p) for p in points]
        limit = _budget(budget)
        sizes = range(1, len(pts) + 1) if subsets else [len(pts)]
        out = []
        for r in sizes:
            for chosen in itertools.combinations(pts, r):
                out.extend(enumerate_subcomplexes(chosen, max_dim, limit))
                if len(out) > limit:
                    from .core.complex import EnumerationBudgetExceeded
                    raise EnumerationBudgetExceeded(f"universe exceeds budget {limit}")
        return cls(tuple(dict.fromkeys(out)), "enumerated-on-vertices")

    @classmethod
    def on_grid(cls, ranges: Sequence[Iterable[int]], max_vertices: int, max_dim: int = 1,
                budget: Optional[int] = None) -> "AdversaryUniverse":
        """Every complex on at most ``max_vertices`` points of an integer grid."""
        grid = [tuple(p) for p in itertools.product(*[list(r) for r in ranges])]
        limit = _budget(budget)
        out = []
        for r in range(1, max_vertices + 1):
            for chosen in itertools.combinations(grid, r):
                out.extend(enumerate_subcomplexes(chosen, max_dim, limit))
                if len(out) > limit:
                    from .core.complex import EnumerationBudgetExceeded
                    raise EnumerationBudgetExceeded(f"universe exceeds budget {limit}")
        return cls(tuple(dict.fromkeys(out)), "enumerated-on-vertices")

    def including(self, extra: Iterable[SimplicialComplex]) -> "AdversaryUniverse":
        return AdversaryUniverse(tuple(dict.fromkeys(list(self.complexes) + list(extra))), self.provenance)

    def index(self, K: SimplicialComplex) -> int:
        try:
            return self.complexes.index(K)
        except ValueError:
            raise ValueError("the reference complex is not in the universe") from None

    def __len__(self):
        return len(self.complexes)

    def __iter__(self):
        return iter(self.complexes)


@functools.total_ordering
@dataclass(frozen=True)
class CardinalityBound:
    """A natural number or one of the symbolic bounds aleph0 < aleph1 < alephTop."""

    value: Union[int, str]

    _RANK = {"aleph0": 1, "aleph1": 2, "alephTop": 3}

    def __post_init__(self):
        if isinstance(self.value, int):
            if self.value < 0:
                raise ValueError("cardinality must be nonnegative")
        elif self.value not in self._RANK:
            raise ValueError(f"unknown cardinal {self.value!r}")

    def _key(self):
        if isinstance(self.value, int):
            return (0, self.value)
        return (self._RANK[self.value], 0)

    def __lt__(self, other: "CardinalityBound"):
        return self._key() < other._key()

    @property
    def finite(self) -> bool:
        return isinstance(self.value, int)

    def __str__(self):
        return str(self.value)


ALEPH_TOP = CardinalityBound("alephTop")


@dataclass
class FaithfulnessReport:
    faithful: bool
    indistinguishable: List[int]
    witnesses: Dict[int, Parameter]
    universe_size: int
    note: str = RELATIVE_NOTE

    def to_json(self) -> dict:
        return {
            "faithful": self.faithful,
            "relative": True,
            "note": self.note,
            "universe_size": self.universe_size,
            "indistinguishable": self.indistinguishable,
            "witnesses": [{"adversary": i, "parameter": _param_json(p)}
                          for i, p in sorted(self.witnesses.items())],
        }


def _param_json(p: Parameter):
    if isinstance(p, Direction):
        return p.to_json()
    from .core.complex import format_rational
    return [format_rational(c) for c in p]


class _Values:
    """Memo of descriptor values keyed by (complex id, parameter)."""

    def __init__(self, D: DescriptorType):
        self.D = D
        self.cache: Dict[Tuple[int, Parameter], DescriptorValue] = {}

    def __call__(self, K: SimplicialComplex, p: Parameter) -> DescriptorValue:
        key = (id(K), p if isinstance(p, Direction) else as_point(p))
        v = self.cache.get(key)
        if v is None:
            v = self.cache[key] = compute(self.D, K, p)
        return v


def distinguishing_parameter(D, K: SimplicialComplex, L: SimplicialComplex,
                             candidates: Iterable[Parameter], _values: Optional[_Values] = None):
    """First candidate where the descriptors of ``K`` and ``L`` differ, else ``None``."""
    values = _values or _Values(DescriptorType.parse(D))
    for p in candidates:
        if values(K, p) != values(L, p):
            return p
    return None


def relative_faithful(D, K: SimplicialComplex, P: Sequence[Parameter],
                      U: AdversaryUniverse) -> FaithfulnessReport:
    D = DescriptorType.parse(D)
    U.index(K)
    values = _Values(D)
    P = list(P)
    bad, witnesses = [], {}
    for i, L in enumerate(U.complexes):
        if L == K:
            continue
        p = distinguishing_parameter(D, K, L, P, values)
        if p is None:
            bad.append(i)
        else:
            witnesses[i] = p
    return FaithfulnessReport(not bad, bad, witnesses, len(U))


class AugmentationStuck(ValueError):
    def __init__(self, adversary: SimplicialComplex, index: int):
        super().__init__(f"no candidate distinguishes adversary #{index}: {adversary!r}")
        self.adversary = adversary
        self.index = index


def augment_to_faithful(D, K: SimplicialComplex, P0: Sequence[Parameter], U: AdversaryUniverse,
                        candidates: Sequence[Parameter],
                        require_vertex_determination: bool = True) -> List[Parameter]:
    """Grow ``P0`` by one distinguishing candidate per residual adversary.

    With ``require_vertex_determination``, ``P0`` must already separate ``K``
    from every adversary with a different vertex set.
    """
    D = DescriptorType.parse(D)
    U.index(K)
    values = _Values(D)
    P = list(dict.fromkeys(P0))
    if require_vertex_determination:
        kv = frozenset(K.vertex_coords[v] for v in K.vertices)
        for i, L in enumerate(U.complexes):
            if frozenset(L.vertex_coords[v] for v in L.vertices) != kv:
                if distinguishing_parameter(D, K, L, P, values) is None:
                    raise ValueError(f"P0 does not separate vertex sets (adversary #{i})")
    for i, L in enumerate(U.complexes):
        if L == K or distinguishing_parameter(D, K, L, P, values) is not None:
            continue
        p = distinguishing_parameter(D, K, L, candidates, values)
        if p is None:
            raise AugmentationStuck(L, i)
        P.append(p)
    return P


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class MinFaithfulResult:
    bound: CardinalityBound
    witness: Optional[Tuple[Parameter, ...]]
    subsets_checked: int
    note: str = RELATIVE_NOTE

    def to_json(self) -> dict:
        return {
            "relative": True,
            "bound": self.bound.value,
            "witness": None if self.witness is None else [_param_json(p) for p in self.witness],
            "subsets_checked": self.subsets_checked,
            "note": self.note,
        }


def distinguishing_masks(D, K: SimplicialComplex, candidates: Sequence[Parameter],
                         U: AdversaryUniverse) -> List[int]:
    """Per adversary, the bitmask of candidates that tell it apart from ``K``."""
    D = DescriptorType.parse(D)
    U.index(K)
    values = _Values(D)
    base = [values(K, p) for p in candidates]
    masks = []
    for L in U.complexes:
        if L == K:
            continue
        m = 0
        for j, p in enumerate(candidates):
            if values(L, p) != base[j]:
                m |= 1 << j
        masks.append(m)
    return masks


def min_faithful_size(D, K: SimplicialComplex, candidates: Sequence[Parameter],
                      U: AdversaryUniverse, budget: Optional[int] = None) -> MinFaithfulResult:
    """Smallest relatively faithful subset of ``candidates``.

    Subsets are tried by increasing size, lexicographically, so the witness is
    deterministic.  ``alephTop`` means no subset, not even all of them, works.
    """
    candidates = list(dict.fromkeys(candidates))
    limit = _budget(budget)
    masks = distinguishing_masks(D, K, candidates, U)
    if any(m == 0 for m in masks):
        return MinFaithfulResult(ALEPH_TOP, None, 0)
    checked = 0
    for size in range(len(candidates) + 1):
        for combo in itertools.combinations(range(len(candidates)), size):
            checked += 1
            if checked > limit:
                raise SearchBudgetExceeded(f"subset search passed budget {limit}")
            chosen = sum(1 << j for j in combo)
            if all(m & chosen for m in masks):
                return MinFaithfulResult(CardinalityBound(size),
                                         tuple(candidates[j] for j in combo), checked)
    return MinFaithfulResult(ALEPH_TOP, None, checked)  # unreachable: full set hits every mask


@dataclass
class Instance:
    K: SimplicialComplex
    candidates: Sequence[Parameter]
    universe: AdversaryUniverse
    label: str = ""


@dataclass
class EvidenceRow:
    label: str
    a: CardinalityBound
    b: CardinalityBound
    contradicts: bool


def strength_evidence(A, B, instances: Iterable[Instance]) -> List[EvidenceRow]:
    """Relative minimum sizes for A and B per instance.

    A row contradicts "A is weaker than B" when A gets by with fewer
    parameters than B.  Agreement is only evidence, never proof.
    """
    rows = []
    for inst in instances:
        a = min_faithful_size(A, inst.K, inst.candidates, inst.universe).bound
        b = min_faithful_size(B, inst.K, inst.candidates, inst.universe).bound
        rows.append(EvidenceRow(inst.label, a, b, a < b))
    return rows


def default_candidates(K: SimplicialComplex) -> List[Direction]:
    """Axes, diagonals and the perpendiculars of vertex differences, both signs."""
    d = K.ambient_dim
    out: List[Direction] = []
    for s in axis_directions(d):
        out += [s, -s]
    for signs in itertools.product((1, -1), repeat=d):
        out.append(Direction(signs))
    pts = [K.vertex_coords[v] for v in K.vertices]
    for p, q in itertools.combinations(pts, 2):
        u = tuple(b - a for a, b in zip(p, q))
        for w in _perpendiculars(u):
            if any(w):
                out += [Direction(w), -Direction(w)]
    return list(dict.fromkeys(out))


def _perpendiculars(u: Sequence) -> List[Tuple]:
    d = len(u)
    if d == 2:
        return [(-u[1], u[0])]
    norm2 = sum(c * c for c in u)
    out = []
    for i in range(d):
        # e_i with its u-component removed
        out.append(tuple((1 if j == i else 0) - u[i] * u[j] / norm2 for j in range(d)))
    return out
