import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from topodesc.core import SimplicialComplex, fixture
from topodesc.core.fixtures import sparse_graph_directions
from topodesc.filtration import Direction, axis_directions
from topodesc.geometry import HalfSpace, check_concise_conditions, envelope, polyhedron_dimension


def lp_dimension(halfspaces, d):
    """Float oracle: a row is an implicit equality iff its slack cannot be made positive."""
    A = np.array([[float(c) for c in h.normal] for h in halfspaces])
    b = np.array([float(h.offset) for h in halfspaces])
    implicit = []
    for i in range(len(halfspaces)):
        res = linprog(-A[i], A_ub=-A, b_ub=-b, bounds=[(None, None)] * d, method="highs")
        if res.status == 0 and -res.fun - b[i] < 1e-9:
            implicit.append(A[i])
    if not implicit:
        return d
    return d - np.linalg.matrix_rank(np.array(implicit))


def hs(*rows):
    return [HalfSpace(tuple(Fraction(c) for c in r[:-1]), Fraction(r[-1])) for r in rows]


def test_polyhedron_dimension_examples():
    assert polyhedron_dimension(hs((1, 0, 0), (-1, 0, 0))) == 1
    assert polyhedron_dimension(hs((1, 0, 0))) == 2
    tri = hs((1, 0, 0), (0, 1, 0), (-1, -1, -3))
    assert polyhedron_dimension(tri) == 2 == lp_dimension(tri, 2)


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        HalfSpace((Fraction(0), Fraction(0)), Fraction(0))


@settings(max_examples=80, deadline=None)
@given(normals=st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                        min_size=1, max_size=7),
       point=st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
       slack=st.lists(st.integers(0, 1), min_size=7, max_size=7))
def test_dimension_matches_lp_oracle(normals, point, slack):
    normals = [n for n in normals if any(n)]
    if not normals:
        return
    # every halfspace contains ``point``; some are tight there
    rows = [n + (sum(a * p for a, p in zip(n, point)) - s,) for n, s in zip(normals, slack)]
    H = hs(*rows)
    assert polyhedron_dimension(H) == lp_dimension(H, 3)


def test_envelope_examples():
    v = SimplicialComplex.from_points([(0, 0)])
    e1, e2 = axis_directions(2)
    assert envelope(v, (0,), [e1, e2]).dimension == 2
    assert envelope(v, (0,), [e1, -e1, e2, -e2]).dimension == 0
    edge = SimplicialComplex.build([(0, 0), (2, 0)], [(0, 1)])
    assert envelope(edge, (0, 1), [e2]).dimension == 2
    with pytest.raises(ValueError):
        envelope(v, (0,), [])


@settings(max_examples=60, deadline=None)
@given(dirs=st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                     min_size=1, max_size=6))
def test_envelope_contains_simplex_and_is_antitone(dirs):
    dirs = [Direction(d) for d in dirs if any(d)]
    if not dirs:
        return
    K = SimplicialComplex.build([(0, 0, 0), (1, 2, 0), (2, 0, 1)], [(0, 1, 2)])
    prev = 3
    for i in range(1, len(dirs) + 1):
        E = envelope(K, (0, 1, 2), dirs[:i])
        for p in K.points_of((0, 1, 2)):
            assert all(h.contains(p) for h in E.halfspaces)
        assert E.dimension <= prev
        prev = E.dimension


def test_envelope_pinned_by_both_normals():
    K = SimplicialComplex.build([(0, 0, 0), (1, 2, 0), (2, 0, 1)], [(0, 1, 2)])
    n = Direction((2, -1, -4))  # (1,2,0) x (2,0,1), normal of the triangle's plane
    tri = (0, 1, 2)
    assert envelope(K, tri, [n]).dimension == 3
    assert envelope(K, tri, [n, -n]).dimension == 2
    edge = SimplicialComplex.build([(0, 0, 0), (1, 0, 0)], [(0, 1)])
    perp = [Direction((0, 1, 0)), Direction((0, -1, 0)), Direction((0, 0, 1)), Direction((0, 0, -1))]
    assert envelope(edge, (0, 1), perp).dimension == 1


def test_concise_conditions_single_vertex_r2():
    v = SimplicialComplex.from_points([(0, 0)])
    e1, e2 = axis_directions(2)
    good = check_concise_conditions(v, [e1, e2, Direction((-1, -1))])
    assert good.satisfied and good.n_directions == 3
    bad = check_concise_conditions(v, [e1, e2])
    assert not bad.size_ok and bad.simplices[0].envelope_dim == 2


def test_sparse_graph_directions():
    K = fixture("sparse_graph", 4, 2)
    S = [Direction(s) for s in sparse_graph_directions(4, 2)]
    assert len(S) == 5
    assert check_concise_conditions(K, S).satisfied
    for sub in itertools.combinations(S, 4):
        assert not check_concise_conditions(K, list(sub)).satisfied
