import random

import pytest
from hypothesis import given, settings, strategies as st

from topodesc.core import SimplicialComplex, barycentric_subdivide_edge, fixture
from topodesc.faithfulness import (
    ALEPH_TOP,
    AdversaryUniverse,
    AugmentationStuck,
    CardinalityBound,
    Instance,
    SearchBudgetExceeded,
    augment_to_faithful,
    default_candidates,
    distinguishing_parameter,
    min_faithful_size,
    relative_faithful,
    strength_evidence,
)
from topodesc.filtration import Direction
from topodesc.reductions import REDUCTIONS

from instances import random_complex, random_direction

e1, e2 = Direction((1, 0)), Direction((0, 1))
AXES = [e1, -e1, e2, -e2]


@pytest.fixture(scope="module")
def square_universe():
    K = fixture("square_K")
    return AdversaryUniverse.on_vertices(K.vertex_coords, 1)


def single_edge_adversaries():
    return AdversaryUniverse.explicit([
        fixture("single_edge"),
        SimplicialComplex.build([(1, 1), (1, 3)], [(0, 1)]),
        SimplicialComplex.from_points([(1, 1), (1, 2)]),
    ])


def test_cardinality_order():
    assert CardinalityBound(7) < CardinalityBound("aleph0") < CardinalityBound("aleph1") < ALEPH_TOP
    assert CardinalityBound(2) < CardinalityBound(3)
    with pytest.raises(ValueError):
        CardinalityBound("aleph2")


def test_relative_faithful_examples(square_universe):
    K = fixture("square_K")
    assert len(square_universe) == 64
    assert relative_faithful("apd", K, [e1, e2], square_universe).faithful
    r = relative_faithful("ecc", fixture("single_edge"), [e1, e2], single_edge_adversaries())
    # the longer edge has chi = 1 from height 1 on in both directions, just
    # like the reference; the two loose vertices have chi = 2 and are caught
    assert not r.faithful and r.indistinguishable == [1]
    assert relative_faithful("pd", K, [], AdversaryUniverse.explicit([K])).faithful


def test_reference_must_be_in_universe():
    with pytest.raises(ValueError):
        relative_faithful("apd", fixture("square_K"), [e1], single_edge_adversaries())


def test_universe_invariants():
    with pytest.raises(ValueError):
        AdversaryUniverse((fixture("single_edge"), fixture("single_edge")))
    with pytest.raises(ValueError):
        AdversaryUniverse.explicit([fixture("single_edge"), fixture("single_vertex", 3)])


def test_distinguishing_parameter_examples():
    K, Kp = fixture("square_K"), fixture("square_Kprime")
    assert distinguishing_parameter("apd", K, Kp, [e1, e2, Direction((1, 1))]) == e1
    assert distinguishing_parameter("d0", K, Kp, AXES) is None


def test_abc_square_axes_hand_derivation():
    # Heights in -e2 are -y: v2=(0,1), v4=(1,1) sit at -1, v1, v3 at 0.  K's
    # edge [v2,v4] enters at -1 and kills a class there; K' has no edge until
    # 0.  So ABC_0 at -1 is (2,1) for K and (2,0) for K'.  The other three axis
    # directions put both edges of each complex at the top height.
    K, Kp = fixture("square_K"), fixture("square_Kprime")
    assert distinguishing_parameter("abc", K, Kp, [e1, -e1, e2]) is None
    assert distinguishing_parameter("abc", K, Kp, AXES) == -e2
    from topodesc.descriptors import compute
    assert dict(compute("abc", K, -e2).payload)[0](-1) == (2, 1)
    assert dict(compute("abc", Kp, -e2).payload)[0](-1) == (2, 0)


def test_augment_examples(square_universe):
    K = fixture("square_K")
    assert augment_to_faithful("apd", K, [e1, e2], square_universe, AXES) == [e1, e2]
    single = AdversaryUniverse.explicit([K])
    assert augment_to_faithful("ecc", K, [e1], single, AXES) == [e1]


def test_augment_grows_set():
    S = fixture("single_edge")
    U = single_edge_adversaries()
    cands = default_candidates(S)
    P = augment_to_faithful("apd", S, [e1], U, cands, require_vertex_determination=False)
    assert P[0] == e1 and relative_faithful("apd", S, P, U).faithful


def test_augment_stuck_on_subdivision():
    S = fixture("single_edge")
    U = AdversaryUniverse.explicit([S, barycentric_subdivide_edge(S, (0, 1))])
    with pytest.raises(AugmentationStuck) as info:
        augment_to_faithful("ecc", S, [e1], U, default_candidates(S), require_vertex_determination=False)
    assert info.value.index == 1


def test_augment_precondition():
    S = fixture("single_edge")
    U = AdversaryUniverse.explicit([S, barycentric_subdivide_edge(S, (0, 1))])
    with pytest.raises(ValueError):
        augment_to_faithful("ecc", S, [e1], U, default_candidates(S))


def test_min_faithful_examples():
    v = fixture("single_vertex", 2)
    U = AdversaryUniverse.on_grid([range(-2, 3)] * 2, 1)
    cands = [e1, e2, Direction((1, 1))]
    apd = min_faithful_size("apd", v, cands, U)
    assert apd.bound == CardinalityBound(2) and apd.witness == (e1, e2)
    assert min_faithful_size("dv", v, cands, U).bound == CardinalityBound(1)
    P = fixture("vertex_pair_edge")
    UP = AdversaryUniverse.on_grid([range(0, 2), range(0, 3)], 2)
    assert min_faithful_size("dv", P, cands, UP).bound == ALEPH_TOP
    assert min_faithful_size("apd", P, cands, UP).to_json()["relative"] is True


def test_min_faithful_budget_is_distinct():
    v = fixture("single_vertex", 2)
    U = AdversaryUniverse.on_grid([range(-2, 3)] * 2, 1)
    with pytest.raises(SearchBudgetExceeded):
        min_faithful_size("apd", v, [e1, e2, Direction((1, 1))], U, budget=2)


def test_strength_evidence_examples(square_universe):
    S = fixture("single_edge")
    single = Instance(S, default_candidates(S), AdversaryUniverse.on_grid([range(0, 3), range(0, 4)], 2), "edge")
    square = Instance(fixture("square_K"), AXES, square_universe, "square")
    (row,) = strength_evidence("ecc", "apd", [single])
    assert row.a == CardinalityBound(3) and row.b == CardinalityBound(2) and not row.contradicts
    (row,) = strength_evidence("abc", "apd", [square])
    assert row.a == ALEPH_TOP and row.b == CardinalityBound(2) and not row.contradicts
    (row,) = strength_evidence("pd", "pd", [square])
    assert row.a == row.b
    (row,) = strength_evidence("apd", "ecc", [single])
    assert row.contradicts


def _small_instance(rng):
    K = random_complex(rng, max_vertices=4, dims=(2,))
    U = AdversaryUniverse.on_vertices([K.vertex_coords[v] for v in K.vertices], max(1, K.dim), subsets=True)
    P = [random_direction(rng, 2, rational=False) for _ in range(rng.randint(1, 3))]
    return K, U, P


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_parameter_monotonicity(seed):
    rng = random.Random(seed)
    K, U, P = _small_instance(rng)
    extra = P + [random_direction(rng, 2, rational=False)]
    for D in ("apd", "bc"):
        if relative_faithful(D, K, P, U).faithful:
            assert relative_faithful(D, K, extra, U).faithful


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_universe_monotonicity(seed):
    rng = random.Random(seed)
    K, U, P = _small_instance(rng)
    small = AdversaryUniverse.explicit([K] + [L for L in U if rng.random() < 0.5])
    for D in ("apd", "ecc"):
        if not relative_faithful(D, K, P, small).faithful:
            assert not relative_faithful(D, K, P, U).faithful


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_witness_verifies(seed):
    rng = random.Random(seed)
    K, U, _ = _small_instance(rng)
    res = min_faithful_size("apd", K, default_candidates(K)[:8], U)
    if res.bound.finite:
        assert relative_faithful("apd", K, res.witness, U).faithful


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_reduction_consistency(seed):
    rng = random.Random(seed)
    K, U, P = _small_instance(rng)
    for r in REDUCTIONS:
        if relative_faithful(r.target, K, P, U).faithful:
            assert relative_faithful(r.source, K, P, U).faithful, r.name
