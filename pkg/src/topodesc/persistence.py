"""Z/2 boundary-matrix reduction and an independent persistent Betti oracle.

Chains are Python ints used as bit vectors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .core.complex import Simplex, SimplicialComplex, facets
from .filtration import FilterAssignment, IndexFilter

INF = math.inf


@dataclass(frozen=True)
class Pairing:
    order: Tuple[Simplex, ...]
    pairs: FrozenSet[Tuple[int, int]]
    essential: FrozenSet[int]

    @cached_property
    def signs(self) -> Dict[Simplex, Tuple[str, int]]:
        """``simplex -> ("positive", k)`` or ``("negative", k)`` for beta_k."""
        out = {}
        for i, j in self.pairs:
            c = self.order[i]
            out[c] = ("positive", len(c) - 1)
            out[self.order[j]] = ("negative", len(c) - 1)
        for i in self.essential:
            c = self.order[i]
            out[c] = ("positive", len(c) - 1)
        return out


def reduce(K: SimplicialComplex, order: IndexFilter) -> Pairing:
    """Standard column reduction of the boundary matrix in index-filter order."""
    seq = order.order
    if set(seq) != K.simplex_set:
        raise ValueError("index filter does not order the simplices of K")
    pos = order.position
    low_to_col: Dict[int, int] = {}
    pairs = set()
    creators = set()
    for j, s in enumerate(seq):
        col = 0
        for f in facets(s):
            col ^= 1 << pos[f]
        while col:
            low = col.bit_length() - 1
            other = low_to_col.get(low)
            if other is None:
                break
            col ^= other
        if col:
            low = col.bit_length() - 1
            low_to_col[low] = col
            pairs.add((low, j))
        else:
            creators.add(j)
    paired = {i for i, _ in pairs}
    return Pairing(seq, frozenset(pairs), frozenset(creators - paired))


# -- independent rank computations ------------------------------------------

def _gf2_rank(vectors) -> int:
    pivots: Dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                r += 1
                break
    return r


def _simplices_by_dim(simplices, k: int) -> List[Simplex]:
    return sorted(s for s in simplices if len(s) == k + 1)


def _boundary_columns(simplices: Sequence[Simplex], index: Dict[Simplex, int]) -> List[int]:
    cols = []
    for s in simplices:
        c = 0
        for f in facets(s):
            c ^= 1 << index[f]
        cols.append(c)
    return cols


def _cycle_basis(k_simplices: Sequence[Simplex], lower_index: Dict[Simplex, int]) -> List[int]:
    """Basis of the kernel of the boundary map, as bit vectors over ``k_simplices``."""
    if not k_simplices:
        return []
    if len(k_simplices[0]) == 1:
        return [1 << i for i in range(len(k_simplices))]
    pivots: Dict[int, Tuple[int, int]] = {}
    basis = []
    for i, s in enumerate(k_simplices):
        col = 0
        for f in facets(s):
            col ^= 1 << lower_index[f]
        combo = 1 << i
        while col:
            top = col.bit_length() - 1
            if top not in pivots:
                pivots[top] = (col, combo)
                break
            pcol, pcombo = pivots[top]
            col ^= pcol
            combo ^= pcombo
        if not col:
            basis.append(combo)
    return basis


def betti_numbers(K: SimplicialComplex) -> Dict[int, int]:
    """Z/2 Betti numbers of ``K`` from boundary ranks."""
    out: Dict[int, int] = {}
    simplices = K.simplex_set
    top = K.dim
    ranks = {}
    for k in range(1, top + 1):
        lower = {s: i for i, s in enumerate(_simplices_by_dim(simplices, k - 1))}
        ranks[k] = _gf2_rank(_boundary_columns(_simplices_by_dim(simplices, k), lower))
    for k in range(0, top + 1):
        b = K.n(k) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if b:
            out[k] = b
    return out


def persistent_betti(f: FilterAssignment, i, j, k: int) -> int:
    """Rank of H_k(F(i)) -> H_k(F(j)), from cycle and boundary spaces.

    This deliberately does not use :func:`reduce`: it is the cross-check for
    diagram multiplicities.
    """
    if i > j:
        raise ValueError("persistent Betti number needs i <= j")
    Fj = [s for s, v in f.values.items() if v <= j]
    kj = _simplices_by_dim(Fj, k)
    index = {s: n for n, s in enumerate(kj)}
    ki = [s for s in kj if f.values[s] <= i]
    lower = {s: n for n, s in enumerate(_simplices_by_dim(Fj, k - 1))} if k > 0 else {}
    # cycles of F(i), re-expressed over the k-simplices of F(j)
    local = _cycle_basis(ki, lower)
    cycles = []
    for c in local:
        v = 0
        for n, s in enumerate(ki):
            if c >> n & 1:
                v |= 1 << index[s]
        cycles.append(v)
    boundaries = _boundary_columns(_simplices_by_dim(Fj, k + 1), index)
    return _gf2_rank(cycles + boundaries) - _gf2_rank(boundaries)


def _just_below(heights: Sequence[Fraction], h) -> Fraction:
    below = [x for x in heights if x < h]
    if below:
        return (below[-1] + h) / 2 if h != INF else below[-1]
    return (h - 1) if h != INF else Fraction(0)


def multiplicity(f: FilterAssignment, k: int, birth, death) -> int:
    """Multiplicity of ``(birth, death)`` in the concise degree-k diagram.

    Inclusion-exclusion of persistent Betti numbers, evaluated just below the
    corner.  For ``death == inf`` the corner is read off the full complex.
    """
    hs = f.heights
    bm = _just_below(hs, birth)
    if death == INF:
        top = hs[-1] if hs else Fraction(0)
        return persistent_betti(f, birth, top, k) - persistent_betti(f, bm, top, k)
    dm = _just_below(hs, death)
    if dm < birth:
        return 0
    return (persistent_betti(f, birth, dm, k) - persistent_betti(f, birth, death, k)
            - persistent_betti(f, bm, dm, k) + persistent_betti(f, bm, death, k))
