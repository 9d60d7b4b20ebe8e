"""Phases of the secondary fan and their exceptional sets.

A phase is a maximal cone of the chamber complex of the charges
``ŵ_1, ..., ŵ_{n+ell}`` in ``Pic ⊗ ℚ``.  Phases are computed from the
arrangement of all hyperplanes spanned by ``k-1`` charges: each region of
the arrangement gets an exact interior point from a small LP, and regions
with the same unstable locus are merged into one phase.  Everything
downstream is phrased as exact cone-membership queries at an interior
point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from math import gcd, lcm
from typing import Sequence

from . import lattice
from .errors import DegenerateCharges, NoGeometricPhase, NotAdjacent, OnWall, OutsideSupport
from .lp import linprog
from .toric import GLSMModel, MonomialIdeal, _canonical_sets


def cone_contains(generators: Sequence[Sequence], point: Sequence) -> bool:
    """Whether ``point`` is a nonnegative rational combination of ``generators``."""
    point = tuple(Fraction(x) for x in point)
    gens = [tuple(g) for g in generators]
    if not any(point):
        return True
    if not gens:
        return False
    if len(point) == 1:
        return any(g[0] * point[0] > 0 for g in gens)
    if len(point) == 2:
        return _planar_cone_contains(gens, point)
    return _lp_cone_contains(gens, point)


def _lp_cone_contains(gens, point) -> bool:
    a_eq = [[g[i] for g in gens] for i in range(len(point))]
    return linprog([0] * len(gens), a_eq, point).feasible


def _planar_cone_contains(gens, point) -> bool:
    # in the plane a point of a cone lies on a generator ray or between two generators
    x, y = point
    for g in gens:
        if g[0] * y == g[1] * x and g[0] * x + g[1] * y > 0:
            return True
    for g, h in itertools.combinations(gens, 2):
        det = g[0] * h[1] - g[1] * h[0]
        if det == 0:
            continue
        a = (x * h[1] - y * h[0]) / det
        b = (g[0] * y - g[1] * x) / det
        if a >= 0 and b >= 0:
            return True
    return False


def _primitive(v) -> tuple[int, ...]:
    g = gcd(*v)
    return tuple(x // g for x in v) if g else tuple(v)


def _sign_normalize(v) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def hyperplane_normals(charges: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Primitive normals of all hyperplanes spanned by ``k-1`` of the charges."""
    k = len(charges[0])
    normals = set()
    for combo in itertools.combinations(range(len(charges)), k - 1):
        rows = [charges[i] for i in combo]
        # generalized cross product: signed maximal minors
        nvec = []
        for j in range(k):
            minor = [[r[c] for c in range(k) if c != j] for r in rows]
            nvec.append((-1) ** j * lattice.det(minor) if rows else 1)
        if any(nvec):
            normals.add(_sign_normalize(_primitive(nvec)))
    return tuple(sorted(normals, reverse=True))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _region_point(constraints):
    """Interior point of ``{x : s * n.x > 0}`` inside the unit box, or None."""
    k = len(constraints[0][1])
    ncon = len(constraints)
    # variables: xp (k), xm (k), t, slack per constraint, box slacks (2k), t slack
    nv = 2 * k + 1 + ncon + 2 * k + 1
    rows, rhs = [], []
    for j, (s, nvec) in enumerate(constraints):
        row = [0] * nv
        for i in range(k):
            row[i] = s * nvec[i]
            row[k + i] = -s * nvec[i]
        row[2 * k] = -1
        row[2 * k + 1 + j] = -1
        rows.append(row)
        rhs.append(0)
    base = 2 * k + 1 + ncon
    for i in range(2 * k):
        row = [0] * nv
        row[i] = 1
        row[base + i] = 1
        rows.append(row)
        rhs.append(1)
    row = [0] * nv
    row[2 * k] = 1
    row[nv - 1] = 1
    rows.append(row)
    rhs.append(1)
    c = [0] * nv
    c[2 * k] = 1
    res = linprog(c, rows, rhs)
    if res.status != "optimal" or res.value <= 0:
        return None
    return tuple(res.x[i] - res.x[k + i] for i in range(k))


def _integral_direction(v) -> tuple[int, ...]:
    den = lcm(*(Fraction(x).denominator for x in v))
    return _primitive(tuple(int(Fraction(x) * den) for x in v))


@dataclass(frozen=True)
class _Region:
    signs: tuple[int, ...]
    point: tuple[Fraction, ...]


def _angle_key(v):
    # half-plane index first, then the cross product decides within a half-plane
    upper = v[1] > 0 or (v[1] == 0 and v[0] > 0)
    return 0 if upper else 1


def _compare_angle(a, b) -> int:
    ha, hb = _angle_key(a), _angle_key(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _planar_points(normals):
    """One interior point per sector cut out by lines through the origin."""
    if len(normals) == 1:
        (h,) = normals
        return [h, tuple(-x for x in h)]
    rays = []
    for h in normals:
        rays += [(-h[1], h[0]), (h[1], -h[0])]
    rays.sort(key=cmp_to_key(_compare_angle))
    # consecutive rays are less than a half-turn apart, so their sum is strictly inside
    return [tuple(a + b for a, b in zip(r, rays[(i + 1) % len(rays)])) for i, r in enumerate(rays)]


def _planar_regions(normals):
    regions = []
    for pt in _planar_points(normals):
        signs = tuple(1 if _dot(h, pt) > 0 else -1 for h in normals)
        regions.append((signs, tuple(Fraction(x) for x in pt)))
    return regions


def _lp_regions(normals):
    # add hyperplanes one at a time, splitting a region only when both sides are nonempty
    regions = [((), None)]
    for h in normals:
        nxt = []
        for signs, pt in regions:
            for s in (1, -1):
                if pt is not None and s * _dot(h, pt) > 0:
                    nxt.append((signs + (s,), pt))
                    continue
                cons = [(si, hi) for si, hi in zip(signs, normals)] + [(s, h)]
                newpt = _region_point(cons)
                if newpt is not None:
                    nxt.append((signs + (s,), newpt))
        regions = nxt
    return regions


@lru_cache(maxsize=64)
def _arrangement(charges: tuple[tuple[int, ...], ...]):
    normals = hyperplane_normals(charges)
    planar = len(charges[0]) == 2 and normals
    regions = _planar_regions(normals) if planar else _lp_regions(normals)
    regions.sort(key=lambda r: tuple(0 if s > 0 else 1 for s in r[0]))
    return normals, tuple(_Region(s, p) for s, p in regions)


@dataclass(frozen=True)
class Phase:
    """A maximal cone of the secondary fan, represented by an interior point."""

    id: int
    eta: tuple[int, ...]
    n: int
    size: int
    minimal_exceptional_sets: tuple[frozenset, ...]

    @property
    def removed_rays(self) -> frozenset:
        return frozenset(i for s in self.minimal_exceptional_sets if len(s) == 1 for i in s)

    @property
    def kept_rays(self) -> frozenset:
        return frozenset(range(self.size)) - self.removed_rays

    @property
    def primitive_collections(self) -> tuple[frozenset, ...]:
        return tuple(s for s in self.minimal_exceptional_sets if len(s) > 1)

    @property
    def stanley_reisner(self) -> MonomialIdeal:
        """``< ∏_{i∈S} x_i >`` over the minimal exceptional sets ``S``."""
        return MonomialIdeal.from_supports(self.minimal_exceptional_sets, self.size)

    @property
    def irrelevant_ideal(self) -> MonomialIdeal:
        """The monomial ideal whose zero set is the exceptional set of the phase."""
        return self.stanley_reisner.alexander_dual()

    @property
    def is_geometric(self) -> bool:
        return all(s <= frozenset(range(self.n)) for s in self.minimal_exceptional_sets)


def _check_generic(model: GLSMModel, eta) -> None:
    if len(eta) != model.k:
        raise ValueError(f"interior point must have {model.k} coordinates")
    if not cone_contains(model.charges, eta):
        raise OutsideSupport(f"{tuple(map(str, eta))} is outside the cone spanned by the charges")
    for combo in itertools.combinations(model.charges, model.k - 1):
        if cone_contains(combo, eta):
            raise OnWall(f"{tuple(map(str, eta))} lies on a wall of the secondary fan")


def minimal_exceptional_sets(model: GLSMModel, eta) -> tuple[frozenset, ...]:
    """Inclusion-minimal ``S`` with ``eta`` outside ``pos{ŵ_j : j ∉ S}``.

    Raises :class:`OnWall` when ``eta`` lies on a chamber boundary.
    """
    eta = tuple(Fraction(x) for x in eta)
    _check_generic(model, eta)
    return _exceptional_sets(model.charges, eta)


def _exceptional_sets(charges, eta) -> tuple[frozenset, ...]:
    size = len(charges)
    found: list[frozenset] = []
    for r in range(1, size + 1):
        for combo in itertools.combinations(range(size), r):
            s = frozenset(combo)
            if any(f <= s for f in found):
                continue
            rest = [charges[j] for j in range(size) if j not in s]
            if not cone_contains(rest, eta):
                found.append(s)
    return _canonical_sets(found)


def enumerate_phases(model: GLSMModel) -> list[Phase]:
    """All phases of the model, in a deterministic order.

    Raises :class:`DegenerateCharges` when the charges do not span
    ``Pic ⊗ ℚ``.
    """
    if lattice.rank(model.charges) != model.k:
        raise DegenerateCharges("charges do not span Pic ⊗ ℚ")
    return list(_phases(model.charges, model.n))


@lru_cache(maxsize=64)
def _phases(charges, n):
    _, regions = _arrangement(charges)
    groups: dict[tuple, list[_Region]] = {}
    for reg in regions:
        if not cone_contains(charges, reg.point):
            continue
        groups.setdefault(_exceptional_sets(charges, reg.point), []).append(reg)
    phases = []
    for pid, (sets, regs) in enumerate(groups.items()):
        total = tuple(sum(col) for col in zip(*(r.point for r in regs)))
        eta = _integral_direction(total)
        phases.append(Phase(pid, eta, n, len(charges), sets))
    return tuple(phases)


def _phase_regions(charges, phase: Phase) -> list[_Region]:
    _, regions = _arrangement(charges)
    return [
        r
        for r in regions
        if cone_contains(charges, r.point)
        and _exceptional_sets(charges, r.point) == phase.minimal_exceptional_sets
    ]


def identify_geometric_phase(phases: Sequence[Phase]) -> int:
    """Id of the unique phase whose exceptional sets avoid every fibre coordinate."""
    geo = [p.id for p in phases if p.is_geometric]
    if len(geo) != 1:
        raise NoGeometricPhase(
            "no phase has all exceptional sets among the base coordinates"
            if not geo
            else f"several candidate geometric phases: {geo}"
        )
    return geo[0]


def landau_ginzburg_phases(phases: Sequence[Phase]) -> list[int]:
    """Phases whose only exceptional set is the set of all fibre coordinates."""
    out = []
    for p in phases:
        fibre = frozenset(range(p.n, p.size))
        if fibre and p.minimal_exceptional_sets == (fibre,):
            out.append(p.id)
    return out


@dataclass(frozen=True)
class WallData:
    phase_pair: tuple[int, int]
    T: tuple[int, ...]
    sigma: int
    zplus: frozenset
    zminus: frozenset
    unit: tuple[int, ...]  # some q with T(q) = 1

    def window(self, m: int = 0) -> list[tuple[int, ...]]:
        """Degrees ``q`` with ``m <= T(q) < m + sigma``, one per class modulo ``ker T``.

        The representatives are the multiples ``j * unit``.
        """
        return [tuple(j * x for x in self.unit) for j in range(m, m + self.sigma)]


def wall_data(model: GLSMModel, phase1: Phase, phase2: Phase) -> WallData:
    """Wall between two adjacent phases, oriented to be positive on ``phase1``."""
    normals, _ = _arrangement(model.charges)
    r1 = _phase_regions(model.charges, phase1)
    r2 = _phase_regions(model.charges, phase2)
    normal = None
    for a in r1:
        for b in r2:
            diff = [i for i, (s, t) in enumerate(zip(a.signs, b.signs)) if s != t]
            if len(diff) == 1:
                normal = normals[diff[0]]
                break
        if normal is not None:
            break
    if normal is None:
        raise NotAdjacent(f"phases {phase1.id} and {phase2.id} do not share a facet")
    t = normal if _dot(normal, phase1.eta) > 0 else tuple(-x for x in normal)
    values = [_dot(t, w) for w in model.charges]
    sigma = sum(v for v in values if v > 0)
    assert sigma == -sum(v for v in values if v < 0), "charges do not sum to zero"
    unit = lattice.solve_linear_integer([t], [1])
    return WallData(
        phase_pair=(phase1.id, phase2.id),
        T=t,
        sigma=sigma,
        zplus=frozenset(i for i, v in enumerate(values) if v > 0),
        zminus=frozenset(i for i, v in enumerate(values) if v < 0),
        unit=tuple(unit),
    )
