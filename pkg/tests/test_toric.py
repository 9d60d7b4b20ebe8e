import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricphases import catalog
from toricphases.errors import NotCalabiYau, NotComplete, NotSmooth, RankDeficient
from toricphases.toric import (
    FanData,
    MonomialIdeal,
    build_from_charges,
    build_from_fan,
    choose_u,
    cox_ideal,
    enhanced_fan,
    enhanced_rays,
    minimal_transversals,
    primitive_collections,
    stanley_reisner_ideal,
)

P2 = FanData.make([(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}])
P1xP1 = FanData.make([(1, 0), (-1, 0), (0, 1), (0, -1)], [{0, 2}, {0, 3}, {1, 2}, {1, 3}])


def brute_primitive_collections(fan):
    """Minimal non-faces by scanning every subset against every cone."""
    nonfaces = [
        frozenset(s)
        for r in range(1, fan.nrays + 1)
        for s in itertools.combinations(range(fan.nrays), r)
        if not any(set(s) <= set(c) for c in fan.max_cones)
    ]
    return {s for s in nonfaces if not any(t < s for t in nonfaces)}


def test_build_from_charges_examples():
    q = build_from_charges([[1]] * 5, [[5]])
    assert q.charges == ((1,), (1,), (1,), (1,), (1,), (-5,))
    assert q.rgrades == (0,) * 5 + (2,)
    assert q.names == ("x1", "x2", "x3", "x4", "x5", "p1")
    x10 = build_from_charges([[1], [1], [1], [2], [5]], [[10]])
    assert x10.dimX == 3 and x10.degrees == ((10,),)
    x33 = build_from_charges([[1]] * 6, [[3], [3]])
    assert x33.dimX == 3 and x33.ell == 2
    with pytest.raises(NotCalabiYau):
        build_from_charges([[1], [1], [1], [1]], [[5]])
    with pytest.raises(RankDeficient):
        build_from_charges([[1, 0], [2, 0], [3, 0]], [[6, 0]])


def test_build_from_fan_p2_cubic():
    m = build_from_fan(P2, [[3]])
    assert m.weights == ((1,), (1,), (1,)) and m.degrees == ((3,),) and m.dimX == 1


def test_build_from_fan_p1xp1():
    m = build_from_fan(P1xP1, [[2, 2]])
    assert m.weights == ((1, 0), (1, 0), (0, 1), (0, 1))
    assert m.degrees == ((2, 2),)


def test_build_from_fan_rejects_bad_fans():
    with pytest.raises(NotSmooth):
        build_from_fan(FanData.make([(1, 0), (0, 2), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}]), [[3]])
    with pytest.raises(NotComplete):
        build_from_fan(FanData.make([(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}]), [[3]])


def test_primitive_collections_examples():
    assert primitive_collections(P2) == (frozenset({0, 1, 2}),)
    assert set(primitive_collections(P1xP1)) == {frozenset({0, 1}), frozenset({2, 3})}
    quintic = catalog.model("X(5)")
    assert primitive_collections(enhanced_fan(quintic)) == (frozenset(range(5)),)


def test_ideals_examples():
    # the product over primitive collections, and its Alexander dual
    assert stanley_reisner_ideal(P2).supports == (frozenset({0, 1, 2}),)
    assert set(stanley_reisner_ideal(P1xP1).supports) == {frozenset({0, 1}), frozenset({2, 3})}
    assert cox_ideal(P2).supports == (frozenset({0}), frozenset({1}), frozenset({2}))
    quintic_fan = enhanced_fan(catalog.model("X(5)"))
    assert stanley_reisner_ideal(quintic_fan).supports == (frozenset(range(5)),)
    assert stanley_reisner_ideal(quintic_fan).render(catalog.model("X(5)").names) == "<x1*x2*x3*x4*x5>"


@pytest.mark.parametrize("fan", [P2, P1xP1] + [enhanced_fan(m) for m in catalog.all_models()[:6]])
def test_cox_is_alexander_dual_of_primitive_collections(fan):
    assert cox_ideal(fan) == stanley_reisner_ideal(fan).alexander_dual()
    assert stanley_reisner_ideal(fan) == cox_ideal(fan).alexander_dual()
    assert set(primitive_collections(fan)) == brute_primitive_collections(fan)


@pytest.mark.parametrize("model", catalog.all_models(), ids=lambda m: m.label)
def test_enhanced_rays_annihilated(model):
    fan = enhanced_rays(model)
    assert fan.nrays == model.size
    for j in range(fan.lattice_rank):
        for t in range(model.k):
            assert sum(model.charges[i][t] * fan.rays[i][j] for i in range(model.size)) == 0
    u = choose_u(model)
    for a, d in enumerate(model.degrees):
        assert sum(w[0] * u[i][a] for i, w in enumerate(model.weights)) == d[0]
        assert all(row[a] >= 0 for row in u)
    assert sum(c[0] for c in model.charges) == 0


def test_enhanced_rays_quintic_and_x33():
    q = enhanced_rays(catalog.model("X(5)"))
    assert q.nrays == 6 and q.lattice_rank == 5
    assert q.rays[5] == (0, 0, 0, 0, 1)
    x33 = enhanced_rays(catalog.model("X(3,3)"))
    assert x33.nrays == 8 and x33.lattice_rank == 7
    assert [sum(r[5 + a] for r in x33.rays[:6]) for a in range(2)] == [3, 3]


def test_enhanced_rays_without_fibre():
    # O(-2) -> P1 as a charge model: Calabi-Yau with no fibre coordinates
    m = build_from_charges([[1], [1], [-2]], [], base_rays=[(1, 0), (1, 2), (1, 1)])
    fan = enhanced_rays(m)
    assert fan.rays == ((1, 0), (1, 2), (1, 1))


def test_enhanced_fan_p1xp1_toy():
    m = build_from_fan(P1xP1, [[2, 2]])
    fan = enhanced_fan(m)
    assert set(primitive_collections(fan)) == {frozenset({0, 1}), frozenset({2, 3})}


sets_strategy = st.lists(st.frozensets(st.integers(0, 5), min_size=1, max_size=4), min_size=1, max_size=5)


@settings(max_examples=150, deadline=None)
@given(sets_strategy)
def test_alexander_duality_is_an_involution(sets):
    ideal = MonomialIdeal.from_supports(sets, 6)
    assert ideal.alexander_dual().alexander_dual() == ideal
    for t in minimal_transversals(ideal.supports, range(6)):
        assert all(t & s for s in ideal.supports)
        for i in t:
            assert not all((t - {i}) & s for s in ideal.supports)
