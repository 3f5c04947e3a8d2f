"""Named complexes that witness the ordering and bound results."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .complex import SimplicialComplex

SQUARE = [(0, 0), (0, 1), (1, 0), (1, 1)]


def single_edge() -> SimplicialComplex:
    return SimplicialComplex.build([(1, 1), (1, 2)], [(0, 1)])


def square_K() -> SimplicialComplex:
    return SimplicialComplex.from_points(SQUARE, [(0, 3), (1, 3)])


def square_Kprime() -> SimplicialComplex:
    return SimplicialComplex.from_points(SQUARE, [(0, 3), (1, 2)])


def appendixA() -> SimplicialComplex:
    # x-heights 0,1,2,3; one edge enters at 2, three at 3 (one merge, one cycle)
    return SimplicialComplex.build(
        [(0, 0), (1, 2), (2, 0), (3, 1)],
        [(1, 2), (0, 3), (1, 3), (2, 3)],
    )


def single_vertex(d: int = 2) -> SimplicialComplex:
    return SimplicialComplex.build([(0,) * d], [(0,)])


def vertex_pair_edge() -> SimplicialComplex:
    """Two vertices (0,0), (0,1) joined by an edge."""
    return SimplicialComplex.build([(0, 0), (0, 1)], [(0, 1)])


def _unit(d: int, i: int) -> List[Fraction]:
    return [Fraction(int(j == i)) for j in range(d)]


def sparse_graph(d: int, n1: int) -> SimplicialComplex:
    """``n1`` disjoint parallel unit edges spanning an ``n1``-plane of R^d.

    Edge 0 runs from the origin along e_1, edge i >= 1 is its translate by
    e_{i+1}.  Parallel edges are the only way ``n1`` disjoint edges can share a
    common ``n1``-plane, so for ``n1 >= 2`` the vertices are not in general
    position.
    """
    if d < 3:
        raise ValueError("sparse_graph needs d >= 3")
    if not 1 <= n1 < d - 1:
        raise ValueError(f"sparse_graph needs 1 <= n1 < d - 1, got n1={n1}, d={d}")
    coords = []
    edges = []
    for i in range(n1):
        base = [Fraction(0)] * d if i == 0 else _unit(d, i)
        tip = list(base)
        tip[0] += 1
        coords += [base, tip]
        edges.append((2 * i, 2 * i + 1))
    return SimplicialComplex.build(coords, edges, ambient_dim=d)


def sparse_graph_directions(d: int, n1: int) -> List[Tuple[Fraction, ...]]:
    """The ``d - 1 + n1`` directions used to pin every edge of :func:`sparse_graph`.

    ``d - 1`` pairwise non-parallel directions positively spanning the space
    orthogonal to the whole n1-plane, then ``n1`` directions positively
    spanning the in-plane offsets between edges.  With a single edge there is
    nothing to share, so ``n1 == 1`` gets the ``d`` normal directions plus e_1.
    """
    if not 1 <= n1 < d - 1:
        raise ValueError(f"need 1 <= n1 < d - 1, got n1={n1}, d={d}")
    out: List[Tuple[Fraction, ...]] = []
    normal_axes = list(range(n1, d))
    for i in normal_axes:
        out.append(tuple(_unit(d, i)))
    out.append(tuple(Fraction(-1) if j in normal_axes else Fraction(0) for j in range(d)))
    extra = 1
    while len(out) < d - 1:
        # (1, extra + 1, 0, ...) in the normal block: never parallel to earlier picks
        v = [Fraction(0)] * d
        v[normal_axes[0]] = Fraction(1)
        v[normal_axes[1]] = Fraction(extra + 1)
        out.append(tuple(v))
        extra += 1
    if n1 == 1:
        # a single edge has no in-plane offset to pin; any direction along it works
        out.append(tuple(_unit(d, 0)))
        return out
    offset_axes = list(range(1, n1))
    for i in offset_axes:
        out.append(tuple(_unit(d, i)))
    out.append(tuple(Fraction(-1) if j in offset_axes else Fraction(0) for j in range(d)))
    return out


def clothespin() -> SimplicialComplex:
    from .constructions import build_clothespin
    return build_clothespin((0, 0), (4, 0), (2, 1), (3, 3))


def clothesline(m: int = 4) -> SimplicialComplex:
    from .constructions import build_clothesline
    return build_clothesline(m)


FIXTURES: Dict[str, Callable[..., SimplicialComplex]] = {
    "single_edge": single_edge,
    "square_K": square_K,
    "square_Kprime": square_Kprime,
    "appendixA": appendixA,
    "sparse_graph": sparse_graph,
    "single_vertex": single_vertex,
    "vertex_pair_edge": vertex_pair_edge,
    "clothespin": clothespin,
    "clothesline": clothesline,
}


class UnknownFixture(ValueError):
    pass


def fixture(name: str, *args, **kwargs) -> SimplicialComplex:
    try:
        make = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
    return make(*args, **kwargs)
