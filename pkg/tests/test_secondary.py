import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricphases import catalog
from toricphases.errors import DegenerateCharges, NoGeometricPhase, NotAdjacent, OnWall, OutsideSupport
from toricphases.secondary import (
    enumerate_phases,
    _lp_regions,
    _planar_regions,
    hyperplane_normals,
    identify_geometric_phase,
    landau_ginzburg_phases,
    minimal_exceptional_sets,
    wall_data,
)
from toricphases.toric import GLSMModel, build_from_charges, build_from_fan, enhanced_fan, primitive_collections

from .oracles import brute_minimal_sets, in_cone_small

TOY = build_from_charges([(1, 0), (1, 0), (0, 1), (0, 1)], [(2, 2)])


def test_quintic_phases():
    q = catalog.model("X(5)")
    phases = enumerate_phases(q)
    assert [p.eta for p in phases] == [(1,), (-1,)]
    assert phases[0].minimal_exceptional_sets == (frozenset(range(5)),)
    assert phases[1].minimal_exceptional_sets == (frozenset({5}),)
    assert phases[1].removed_rays == frozenset({5})
    assert phases[0].primitive_collections == (frozenset(range(5)),)
    assert identify_geometric_phase(phases) == 0
    assert landau_ginzburg_phases(phases) == [1]


def test_minimal_exceptional_sets_examples():
    q = catalog.model("X(5)")
    assert minimal_exceptional_sets(q, (1,)) == (frozenset(range(5)),)
    assert minimal_exceptional_sets(q, (Fraction(-7, 3),)) == (frozenset({5}),)
    x223 = catalog.model("X(2,2,3)")
    assert minimal_exceptional_sets(x223, (-1,)) == (frozenset({7, 8, 9}),)
    assert set(brute_minimal_sets(x223.charges, (-1,))) == {frozenset({7, 8, 9})}


def test_on_wall_and_outside_support():
    q = catalog.model("X(5)")
    with pytest.raises(OnWall):
        minimal_exceptional_sets(q, (0,))
    with pytest.raises(OnWall):
        minimal_exceptional_sets(TOY, (1, 0))
    # a non-Calabi-Yau charge set whose cone is a proper subset of the plane
    m = GLSMModel(n=3, ell=0, k=2, charges=((1, 0), (0, 1), (1, 1)), rgrades=(0, 0, 0), names=("a", "b", "c"))
    with pytest.raises(OutsideSupport):
        minimal_exceptional_sets(m, (-1, -1))


def test_degenerate_charges():
    m = GLSMModel(n=3, ell=0, k=2, charges=((1, 1), (-2, -2), (1, 1)), rgrades=(0, 0, 0), names=("a", "b", "c"))
    with pytest.raises(DegenerateCharges):
        enumerate_phases(m)


def test_toy_k2_against_grid():
    phases = enumerate_phases(TOY)
    assert len(phases) == 3
    # grid oracle: distinct brute-force exceptional-set patterns over generic grid points
    normals = hyperplane_normals(TOY.charges)
    patterns = set()
    for a, b in itertools.product(range(-12, 13), repeat=2):
        eta = (Fraction(a, 4) + Fraction(1, 97), Fraction(b, 4) + Fraction(1, 89))
        if any(n[0] * eta[0] + n[1] * eta[1] == 0 for n in normals):
            continue
        patterns.add(frozenset(brute_minimal_sets(TOY.charges, eta)))
    assert patterns == {frozenset(p.minimal_exceptional_sets) for p in phases}
    for p in phases:
        assert set(p.minimal_exceptional_sets) == set(brute_minimal_sets(TOY.charges, p.eta))


def test_toy_walls():
    phases = enumerate_phases(TOY)
    for p1, p2 in itertools.combinations(phases, 2):
        w = wall_data(TOY, p1, p2)
        assert sum(x * y for x, y in zip(w.T, p1.eta)) > 0
        assert sum(x * y for x, y in zip(w.T, p2.eta)) < 0
        values = [sum(x * y for x, y in zip(w.T, c)) for c in TOY.charges]
        assert w.sigma == sum(v for v in values if v > 0) == -sum(v for v in values if v < 0)
        assert w.zplus == frozenset(i for i, v in enumerate(values) if v > 0)
        window = w.window(3)
        assert len(window) == w.sigma
        assert [sum(x * y for x, y in zip(w.T, q)) for q in window] == list(range(3, 3 + w.sigma))


def test_not_adjacent():
    m = build_from_charges([(1, 0), (0, 1), (-1, 0)], [(0, 1)])
    phases = enumerate_phases(m)
    assert len(phases) == 4
    pairs = {}
    for p1, p2 in itertools.combinations(phases, 2):
        try:
            wall_data(m, p1, p2)
            pairs[(p1.id, p2.id)] = True
        except NotAdjacent:
            pairs[(p1.id, p2.id)] = False
            # opposite quadrants
            assert all(x * y < 0 for x, y in zip(p1.eta, p2.eta))
    assert sum(pairs.values()) == 4


@pytest.mark.parametrize("name, sigma", [("X(5)", 5), ("X(3,3)", 6), ("X(2,12)", 14), ("X(2,2,2,2)", 8)])
def test_wall_sigma(name, sigma):
    m = catalog.model(name)
    g, lg = enumerate_phases(m)
    w = wall_data(m, g, lg)
    assert w.T == (1,) and w.sigma == sigma
    assert w.window(0) == [(j,) for j in range(sigma)]
    assert w.zminus == m.p_indices and w.zplus == m.x_indices


def test_no_geometric_phase():
    m = build_from_charges([[1]] * 6, [[7], [-1]])
    with pytest.raises(NoGeometricPhase):
        identify_geometric_phase(enumerate_phases(m))


@pytest.mark.parametrize("model", catalog.all_models(), ids=lambda m: m.label)
def test_catalog_phase_structure(model):
    phases = enumerate_phases(model)
    assert len(phases) == 2
    geo = phases[identify_geometric_phase(phases)]
    assert geo.eta == (1,) and geo.minimal_exceptional_sets == (model.x_indices,)
    (lg,) = landau_ginzburg_phases(phases)
    assert phases[lg].minimal_exceptional_sets == (model.p_indices,)


def test_geometric_phase_matches_enhanced_fan():
    for model in (catalog.model("X(5)"), build_from_fan_p1xp1()):
        phases = enumerate_phases(model)
        geo = phases[identify_geometric_phase(phases)]
        assert set(geo.minimal_exceptional_sets) == set(primitive_collections(enhanced_fan(model)))
        assert geo.irrelevant_ideal == geo.stanley_reisner.alexander_dual()


def build_from_fan_p1xp1():
    from toricphases.toric import FanData

    fan = FanData.make([(1, 0), (-1, 0), (0, 1), (0, -1)], [{0, 2}, {0, 3}, {1, 2}, {1, 3}])
    return build_from_fan(fan, [[2, 2]])


k1_models = st.lists(st.integers(1, 6), min_size=2, max_size=6).flatmap(
    lambda w: st.lists(st.integers(1, sum(w)), min_size=0, max_size=3).map(lambda d: (w, d))
)


@settings(max_examples=100, deadline=None)
@given(k1_models)
def test_random_k1_phases_against_brute_force(data):
    w, d = data
    d = list(d)
    rest = sum(w) - sum(d)
    if rest <= 0:
        d = [sum(w)]
    else:
        d.append(rest)
    m = build_from_charges([[x] for x in w], [[x] for x in d])
    phases = enumerate_phases(m)
    assert len(phases) == 2
    for p in phases:
        assert set(p.minimal_exceptional_sets) == set(brute_minimal_sets(m.charges, p.eta))


vec2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(any)


@settings(max_examples=40, deadline=None)
@given(st.lists(vec2, min_size=2, max_size=5))
def test_random_k2_phases_against_brute_force(vectors):
    charges = list(vectors)
    total = tuple(-sum(c[i] for c in charges) for i in range(2))
    if any(total):
        charges.append(total)
    if len(charges) < 3:
        return
    m = GLSMModel(n=len(charges), ell=0, k=2, charges=tuple(charges), rgrades=(0,) * len(charges),
                  names=tuple(f"z{i}" for i in range(len(charges))))
    try:
        phases = enumerate_phases(m)
    except DegenerateCharges:
        return
    seen = set()
    for p in phases:
        sets = frozenset(p.minimal_exceptional_sets)
        assert sets not in seen
        seen.add(sets)
        assert set(p.minimal_exceptional_sets) == set(brute_minimal_sets(m.charges, p.eta))
        assert in_cone_small(m.charges, p.eta)


@settings(max_examples=60, deadline=None)
@given(st.lists(vec2, min_size=1, max_size=6))
def test_planar_regions_match_lp_regions(vectors):
    normals = hyperplane_normals(vectors)
    if not normals:
        return
    planar = {signs for signs, _ in _planar_regions(normals)}
    lp = {signs for signs, _ in _lp_regions(normals)}
    assert planar == lp
    for signs, pt in _planar_regions(normals):
        assert all(s * (h[0] * pt[0] + h[1] * pt[1]) > 0 for s, h in zip(signs, normals))
