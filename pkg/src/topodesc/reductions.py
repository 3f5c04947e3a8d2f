"""Maps that recover a weaker descriptor from a stronger one.

Every transform reads only the descriptor value; none of them looks at the
complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Tuple

from .core.complex import SimplicialComplex
from .descriptors import (
    DescriptorType,
    DescriptorValue,
    PersistenceDiagram,
    StepFunction,
    step_family,
    compute,
)
from .filtration import Direction
from .persistence import INF

T = DescriptorType


def _expect(v: DescriptorValue, kind: DescriptorType) -> None:
    if v.kind is not kind:
        raise TypeError(f"expected a {kind.name} value, got {v.kind.name}")


def _merge_heights(functions: Iterable[StepFunction]) -> List[Fraction]:
    return sorted({h for fn in functions for h in fn.heights})


def apd_to_pd(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.APD)
    pts = [p for p in v.payload.points if p[1] != p[2]]
    return DescriptorValue(T.PD, PersistenceDiagram.from_points(pts, verbose=False))


def _difference(fn: StepFunction) -> StepFunction:
    return StepFunction.from_samples(((h, (a - b,)) for h, (a, b) in fn.events), 1)


def abc_to_bc(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.ABC)
    return DescriptorValue(T.BC, step_family({k: _difference(fn) for k, fn in v.payload}))


def aecc_to_ecc(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.AECC)
    return DescriptorValue(T.ECC, _difference(v.payload))


def pd_to_bc(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.PD)
    dgm: PersistenceDiagram = v.payload
    out = {}
    for k in dgm.degrees:
        pts = [(b, d) for kk, b, d in dgm.points if kk == k]
        heights = sorted({b for b, _ in pts} | {d for _, d in pts if d != INF})
        out[k] = StepFunction.from_samples(
            ((h, (sum(1 for b, d in pts if b <= h < d),)) for h in heights), 1)
    return DescriptorValue(T.BC, step_family(out))


def bc_to_ecc(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.BC)
    fam = dict(v.payload)
    heights = _merge_heights(fam.values())
    return DescriptorValue(T.ECC, StepFunction.from_samples(
        ((h, (sum((-1) ** k * fn(h)[0] for k, fn in fam.items()),)) for h in heights), 1))


def apd_to_abc(v: DescriptorValue) -> DescriptorValue:
    _expect(v, T.APD)
    dgm: PersistenceDiagram = v.payload
    out = {}
    for k in dgm.degrees:
        pts = [(b, d) for kk, b, d in dgm.points if kk == k]
        heights = sorted({b for b, _ in pts} | {d for _, d in pts if d != INF})
        out[k] = StepFunction.from_samples(
            ((h, (sum(1 for b, _ in pts if b <= h), sum(1 for _, d in pts if d <= h)))
             for h in heights), 2)
    return DescriptorValue(T.ABC, step_family(out))


def abc_to_aecc(v: DescriptorValue) -> DescriptorValue:
    """A k-simplex is positive for beta_k or negative for beta_{k-1}.

    So the even count gathers positives of even degree and negatives of odd
    degree (those simplices have even dimension k + 1), and vice versa.
    """
    _expect(v, T.ABC)
    fam = dict(v.payload)
    heights = _merge_heights(fam.values())
    samples = []
    for h in heights:
        even = odd = 0
        for k, fn in fam.items():
            pos, neg = fn(h)
            if k % 2 == 0:
                even, odd = even + pos, odd + neg
            else:
                even, odd = even + neg, odd + pos
        samples.append((h, (even, odd)))
    return DescriptorValue(T.AECC, StepFunction.from_samples(samples, 2))


@dataclass(frozen=True)
class Reduction:
    source: DescriptorType
    target: DescriptorType
    transform: Callable[[DescriptorValue], DescriptorValue]

    @property
    def name(self) -> str:
        return f"{self.source.value}->{self.target.value}"

    def __call__(self, v: DescriptorValue) -> DescriptorValue:
        return self.transform(v)


REDUCTIONS: Tuple[Reduction, ...] = (
    Reduction(T.APD, T.PD, apd_to_pd),
    Reduction(T.ABC, T.BC, abc_to_bc),
    Reduction(T.AECC, T.ECC, aecc_to_ecc),
    Reduction(T.PD, T.BC, pd_to_bc),
    Reduction(T.BC, T.ECC, bc_to_ecc),
    Reduction(T.APD, T.ABC, apd_to_abc),
    Reduction(T.ABC, T.AECC, abc_to_aecc),
)


def verify_reduction(r: Reduction, K: SimplicialComplex, directions: Iterable[Direction]) -> bool:
    """True iff ``r`` commutes with direct computation in every direction."""
    for s in directions:
        if r(compute(r.source, K, s)).payload != compute(r.target, K, s).payload:
            return False
    return True
