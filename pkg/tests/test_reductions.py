import random

import pytest
from hypothesis import given, settings, strategies as st

from topodesc.core import fixture
from topodesc.descriptors import (
    DescriptorType as T,
    DescriptorValue,
    PersistenceDiagram,
    StepFunction,
    compute,
)
from topodesc.filtration import Direction
from topodesc.persistence import INF
from topodesc.reductions import (
    REDUCTIONS,
    Reduction,
    abc_to_aecc,
    abc_to_bc,
    aecc_to_ecc,
    apd_to_abc,
    apd_to_pd,
    bc_to_ecc,
    pd_to_bc,
    verify_reduction,
)

from instances import random_complex, random_direction

e1, e2 = Direction((1, 0)), Direction((0, 1))


def diagram(kind, pts):
    return DescriptorValue(kind, PersistenceDiagram.from_points(pts, verbose=kind is T.APD))


def fam(kind, funcs):
    return DescriptorValue(kind, tuple(sorted(funcs.items())))


def test_apd_to_pd_examples():
    v = apd_to_pd(diagram(T.APD, [(0, 1, 1), (0, 1, INF)]))
    assert v.payload.points == ((0, 1, INF),)
    clean = diagram(T.APD, [(0, 0, 2)])
    assert apd_to_pd(clean).payload.points == clean.payload.points
    got = apd_to_pd(compute("apd", fixture("appendixA"), e1)).payload
    assert got.points == ((0, 0, INF), (0, 1, 3), (1, 3, INF))


def test_flavor_mismatch():
    with pytest.raises(TypeError):
        apd_to_pd(compute("pd", fixture("single_edge"), e1))
    with pytest.raises(TypeError):
        abc_to_bc(compute("bc", fixture("single_edge"), e1))


def test_difference_examples():
    assert aecc_to_ecc(compute("aecc", fixture("single_edge"), e1)).payload.events == ((1, (1,)),)
    zero = DescriptorValue(T.AECC, StepFunction((), 2))
    assert aecc_to_ecc(zero).payload.is_zero()
    bc = abc_to_bc(compute("abc", fixture("square_K"), e1)).payload
    assert dict(bc)[0].events == ((0, (2,)),)


def test_pd_to_bc_examples():
    one = pd_to_bc(diagram(T.PD, [(0, 0, INF)])).payload
    assert dict(one)[0].events == ((0, (1,)),)
    got = dict(pd_to_bc(compute("pd", fixture("appendixA"), e1)).payload)
    assert got[0].events == ((0, (1,)), (1, (2,)), (3, (1,)))
    assert got[1].events == ((3, (1,)),)
    assert pd_to_bc(diagram(T.PD, [])).payload == ()


def test_bc_to_ecc_examples():
    const = StepFunction.from_samples([(0, (1,))], 1)
    assert bc_to_ecc(fam(T.BC, {0: const, 1: const})).payload.is_zero()
    ecc = bc_to_ecc(compute("bc", fixture("appendixA"), e1)).payload
    assert ecc(3) == (0,)
    assert bc_to_ecc(fam(T.BC, {})).payload.is_zero()


def test_verbose_examples():
    abc = apd_to_abc(compute("apd", fixture("single_edge"), e1)).payload
    assert dict(abc)[0](1) == (2, 1)
    aecc = abc_to_aecc(compute("abc", fixture("single_edge"), e1)).payload
    assert aecc(1) == (2, 1)
    empty = DescriptorValue(T.ABC, ())
    assert abc_to_aecc(empty).payload.is_zero()


def test_reduction_list():
    pairs = {(r.source, r.target) for r in REDUCTIONS}
    assert pairs == {(T.APD, T.PD), (T.ABC, T.BC), (T.AECC, T.ECC), (T.PD, T.BC),
                     (T.BC, T.ECC), (T.APD, T.ABC), (T.ABC, T.AECC)}


def test_verify_reduction_examples():
    A = fixture("appendixA")
    dirs = [e1, e2, Direction((1, 1)), Direction((-2, 3))]
    assert all(verify_reduction(r, A, dirs) for r in REDUCTIONS)
    broken = Reduction(T.APD, T.PD, lambda v: DescriptorValue(T.PD, PersistenceDiagram((), False)))
    assert not verify_reduction(broken, A, dirs)
    assert verify_reduction(broken, A, [])


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_commuting_squares(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    s = random_direction(rng, K.ambient_dim)
    for r in REDUCTIONS:
        assert verify_reduction(r, K, [s]), r.name


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_composition_consistency(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    apd = compute("apd", K, random_direction(rng, K.ambient_dim, rational=False))
    assert pd_to_bc(apd_to_pd(apd)) == abc_to_bc(apd_to_abc(apd))
