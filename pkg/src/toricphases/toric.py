"""Toric data: charge matrices, fans, the enhanced model, and monomial ideals.

Coordinates are indexed from 0.  The first ``n`` coordinates are the base
coordinates ``x1..xn``; the last ``ell`` are the fibre coordinates
``p1..p_ell`` of the total space, whose charges are ``-d_a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from . import lattice
from .errors import (
    NoIntegerSolution,
    NotCalabiYau,
    NotComplete,
    NotSmooth,
    RankDeficient,
    TorsionPicard,
)

IndexSet = frozenset


def _canonical_sets(sets: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    uniq = {frozenset(s) for s in sets}
    return tuple(sorted(uniq, key=lambda s: (len(s), sorted(s))))


def minimal_sets(sets: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    """Inclusion-minimal members of a family of sets."""
    sets = _canonical_sets(sets)
    out = []
    for s in sets:
        if not any(t <= s for t in out):
            out.append(s)
    return tuple(out)


def minimal_transversals(sets: Sequence[frozenset], universe: Iterable[int]) -> tuple[frozenset, ...]:
    """All inclusion-minimal subsets of ``universe`` meeting every member of ``sets``."""
    universe = sorted(universe)
    sets = list(sets)
    found: list[frozenset] = []
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            t = frozenset(combo)
            if any(f <= t for f in found):
                continue
            if all(t & s for s in sets):
                found.append(t)
    return _canonical_sets(found)


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal, stored by the supports of its minimal generators."""

    nvars: int
    supports: tuple[frozenset, ...]

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], nvars: int) -> MonomialIdeal:
        return cls(nvars, minimal_sets(supports))

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors of the minimal generators."""
        return tuple(tuple(int(i in s) for i in range(self.nvars)) for s in self.supports)

    def alexander_dual(self) -> MonomialIdeal:
        return MonomialIdeal.from_supports(
            minimal_transversals(self.supports, range(self.nvars)), self.nvars
        )

    def render(self, names: Sequence[str]) -> str:
        gens = ["*".join(names[i] for i in sorted(s)) or "1" for s in self.supports]
        return "<" + ", ".join(gens) + ">"


@dataclass(frozen=True)
class FanData:
    lattice_rank: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[frozenset, ...] = ()

    @classmethod
    def make(cls, rays, max_cones=()) -> FanData:
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        rank = len(rays[0]) if rays else 0
        if any(len(r) != rank for r in rays):
            raise ValueError("rays have inconsistent lengths")
        return cls(rank, rays, _canonical_sets(max_cones))

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def is_simplicial(self) -> bool:
        return all(
            lattice.rank([self.rays[i] for i in sorted(c)]) == len(c) for c in self.max_cones
        )

    def is_smooth(self) -> bool:
        for c in self.max_cones:
            rows = [self.rays[i] for i in sorted(c)]
            if lattice.rank(rows) != len(rows):
                return False
            if any(f != 1 for f in lattice.invariant_factors(rows)):
                return False
        return True

    def in_some_cone(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return any(s <= c for c in self.max_cones)


@dataclass(frozen=True)
class GLSMModel:
    """Charge data of the total space ``Tot(⊕ O(-d_a) -> P_Σ)``.

    ``charges`` has ``n + ell`` rows in ``ℤ^k``: the weights ``w_i`` of the
    base coordinates followed by ``-d_a`` for the fibre coordinates.
    """

    n: int
    ell: int
    k: int
    charges: tuple[tuple[int, ...], ...]
    rgrades: tuple[int, ...]
    names: tuple[str, ...]
    base_rays: tuple[tuple[int, ...], ...] | None = None
    base_cones: tuple[frozenset, ...] | None = None
    label: str = ""
    u: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return self.n + self.ell

    @property
    def weights(self) -> tuple[tuple[int, ...], ...]:
        return self.charges[: self.n]

    @property
    def degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(-x for x in c) for c in self.charges[self.n :])

    @property
    def dimX(self) -> int:
        return self.n - self.k - self.ell

    @property
    def x_indices(self) -> frozenset:
        return frozenset(range(self.n))

    @property
    def p_indices(self) -> frozenset:
        return frozenset(range(self.n, self.n + self.ell))

    def charge_matrix(self) -> lattice.IntMatrix:
        """The ``k x (n+ell)`` matrix whose columns are the charges."""
        return lattice.IntMatrix.from_rows(self.charges, self.k).transpose()


def _default_names(n: int, ell: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n)) + tuple(f"p{a + 1}" for a in range(ell))


def build_from_charges(
    weights: Sequence[Sequence[int]],
    degrees: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    *,
    label: str = "",
    base_rays=None,
    base_cones=None,
) -> GLSMModel:
    """Assemble a model from base weights ``w_i`` and section degrees ``d_a``.

    Raises :class:`NotCalabiYau` unless ``Σ w_i = Σ d_a`` and
    :class:`RankDeficient` unless the charges span ``ℚ^k``.
    """
    weights = [tuple(int(x) for x in w) for w in weights]
    degrees = [tuple(int(x) for x in d) for d in degrees]
    if not weights:
        raise RankDeficient("no coordinates")
    k = len(weights[0])
    if k < 1 or any(len(r) != k for r in weights + degrees):
        raise RankDeficient("charge rows must all have the same positive length")
    n, ell = len(weights), len(degrees)
    if n < k + 1:
        raise RankDeficient(f"need at least k+1={k + 1} base coordinates, got {n}")
    total_w = tuple(sum(col) for col in zip(*weights))
    total_d = tuple(sum(col) for col in zip(*degrees)) if degrees else (0,) * k
    if total_w != total_d:
        raise NotCalabiYau(f"sum of weights {total_w} != sum of degrees {total_d}")
    charges = tuple(weights) + tuple(tuple(-x for x in d) for d in degrees)
    if lattice.rank(charges) != k:
        raise RankDeficient("charges do not span Pic ⊗ ℚ")
    if names is None:
        names = _default_names(n, ell)
    names = tuple(names)
    if len(names) != n + ell or len(set(names)) != len(names):
        raise ValueError("need n+ell distinct coordinate names")
    return GLSMModel(
        n=n,
        ell=ell,
        k=k,
        charges=charges,
        rgrades=(0,) * n + (2,) * ell,
        names=names,
        base_rays=None if base_rays is None else tuple(tuple(r) for r in base_rays),
        base_cones=None if base_cones is None else _canonical_sets(base_cones),
        label=label,
    )


# --- fans ---------------------------------------------------------------------


def _check_smooth(fan: FanData) -> None:
    for i, r in enumerate(fan.rays):
        if not any(r) or gcd(*r) != 1:
            raise NotSmooth(f"ray {i} = {r} is not primitive")
    for c in fan.max_cones:
        rows = [fan.rays[i] for i in sorted(c)]
        if len(rows) != fan.lattice_rank or abs(lattice.det(rows)) != 1:
            raise NotSmooth(f"cone {sorted(c)} is not unimodular")


def _generic_points(rank: int) -> list[tuple[int, ...]]:
    base = [3**i + i for i in range(rank)]
    pts = []
    for signs in itertools.product((1, -1), repeat=rank):
        pts.append(tuple(s * b for s, b in zip(signs, base)))
    return pts


def _check_complete(fan: FanData) -> None:
    rank = fan.lattice_rank
    if not fan.max_cones:
        raise NotComplete("fan has no cones")
    facets: dict[frozenset, list[int]] = {}
    for c in fan.max_cones:
        for r in c:
            face = c - {r}
            rows = [fan.rays[i] for i in sorted(face)] + [fan.rays[r]]
            facets.setdefault(face, []).append(1 if lattice.det(rows) > 0 else -1)
    for face, sides in facets.items():
        if len(sides) != 2 or sides[0] == sides[1]:
            raise NotComplete(f"facet {sorted(face)} is not shared by two opposite cones")
    for pt in _generic_points(rank):
        if not any(_simplicial_contains(fan, c, pt) for c in fan.max_cones):
            raise NotComplete(f"point {pt} lies in no cone")


def _simplicial_contains(fan: FanData, cone: frozenset, pt) -> bool:
    rows = [fan.rays[i] for i in sorted(cone)]
    cols = [list(col) for col in zip(*rows)]  # rank x len(cone)
    lam = lattice.solve_rational(cols, pt)
    return lam is not None and all(x >= 0 for x in lam)


def charges_from_fan(fan: FanData) -> tuple[tuple[int, ...], ...]:
    """Charges ``w_i`` as the cokernel of ``v*: M -> ℤ^n``, in Hermite-normal basis of Pic."""
    vmat = lattice.IntMatrix.from_rows(fan.rays, fan.lattice_rank)  # n x rank
    d, u, _ = lattice.smith_normal_form(vmat)
    r = lattice.rank(fan.rays)
    if any(d[i, i] != 1 for i in range(r)):
        raise TorsionPicard("Pic has torsion")
    wmat = [u.row(i) for i in range(r, vmat.nrows)]
    if not wmat:
        raise RankDeficient("Picard group is trivial")
    h, _ = lattice.hermite_normal_form(wmat)
    return tuple(h.col(j) for j in range(h.ncols))


def build_from_fan(
    fan: FanData, degrees: Sequence[Sequence[int]], names=None, *, label: str = ""
) -> GLSMModel:
    """Model of a complete intersection in the smooth complete toric variety of ``fan``.

    The Picard basis is the Hermite normal form of the cokernel
    presentation; ``degrees`` are expressed in that basis.
    """
    _check_smooth(fan)
    _check_complete(fan)
    weights = charges_from_fan(fan)
    return build_from_charges(
        weights, degrees, names, label=label, base_rays=fan.rays, base_cones=fan.max_cones
    )


def _positive_covector(vectors) -> tuple[int, ...] | None:
    k = len(vectors[0])
    cands = [tuple(sum(col) for col in zip(*vectors)), (1,) * k]
    cands += [tuple(int(i == j) for j in range(k)) for i in range(k)]
    for c in cands:
        if all(sum(a * b for a, b in zip(c, v)) > 0 for v in vectors):
            return c
    return None


def _nonnegative_solution(weights, target, limit=200_000):
    c = _positive_covector(weights)
    if c is None:
        return None
    dot = lambda v: sum(a * b for a, b in zip(c, v))  # noqa: E731
    budget = dot(target)
    bounds = [budget // dot(w) for w in weights]
    n = len(weights)
    steps = 0

    def rec(i, rest):
        nonlocal steps
        steps += 1
        if steps > limit:
            return None
        if i == n:
            return () if not any(rest) else None
        if dot(rest) < 0:
            return None
        for ui in range(min(bounds[i], dot(rest) // dot(weights[i])), -1, -1):
            sub = rec(i + 1, tuple(r - ui * w for r, w in zip(rest, weights[i])))
            if sub is not None:
                return (ui,) + sub
        return None

    return rec(0, tuple(target))


def choose_u(model: GLSMModel) -> tuple[tuple[int, ...], ...]:
    """Integer columns ``u^a`` with ``Σ_i w_i u_i^a = d_a``, nonnegative when possible.

    Returned as ``n`` rows ``(u_i^1, ..., u_i^ell)``.
    """
    wmat = lattice.IntMatrix.from_rows(model.weights, model.k).transpose()
    cols = []
    for d in model.degrees:
        sol = lattice.solve_linear_integer(wmat, d)
        if any(x < 0 for x in sol):
            sol = _nonnegative_solution(model.weights, d) or sol
        cols.append(tuple(sol))
    return tuple(tuple(col[i] for col in cols) for i in range(model.n))


def gale_dual_rays(weights) -> tuple[tuple[int, ...], ...]:
    """Rays ``v_i`` with ``Σ w_i ⊗ v_i = 0`` from a ℤ-basis of the relation lattice."""
    wmat = lattice.IntMatrix.from_rows(weights).transpose()
    basis = lattice.kernel_basis(wmat)
    return tuple(tuple(b[i] for b in basis) for i in range(len(weights)))


def enhanced_fan(model: GLSMModel, base_rays=None, base_cones=None) -> FanData:
    """Rays ``v̂_i`` in ``N ⊕ ℤ^ell`` (and cones when the base cones are known).

    ``v̂_i = (v_i, u_i)`` for base coordinates and ``v̂_{n+a} = (0, e_a)``.
    Base rays default to the model's own, then to the Gale dual of the
    weights.  For ``k == 1`` without stored cones, the weighted projective
    fan (all proper subsets) is used.
    """
    if base_rays is None:
        base_rays = model.base_rays
    if base_rays is None:
        base_rays = gale_dual_rays(model.weights)
    if base_cones is None:
        base_cones = model.base_cones
    if base_cones is None and model.k == 1:
        base_cones = [frozenset(c) for c in itertools.combinations(range(model.n), model.n - 1)]
    u = choose_u(model) if model.ell else ((),) * model.n
    rank = len(base_rays[0]) if base_rays else 0
    rays = [tuple(base_rays[i]) + tuple(u[i]) for i in range(model.n)]
    for a in range(model.ell):
        rays.append((0,) * rank + tuple(int(a == b) for b in range(model.ell)))
    cones = ()
    if base_cones:
        cones = [frozenset(c) | model.p_indices for c in base_cones]
    # ŵ^T v̂ = 0
    for j in range(rank + model.ell):
        for t in range(model.k):
            if sum(model.charges[i][t] * rays[i][j] for i in range(model.size)):
                raise NoIntegerSolution("charges do not annihilate the enhanced rays")
    return FanData.make(rays, cones)


def enhanced_rays(model: GLSMModel, base_rays=None) -> FanData:
    return enhanced_fan(model, base_rays=base_rays)


def primitive_collections(fan: FanData) -> tuple[frozenset, ...]:
    """Minimal sets of ray indices not contained in any cone of ``fan``."""
    found: list[frozenset] = []
    for size in range(1, fan.nrays + 1):
        for combo in itertools.combinations(range(fan.nrays), size):
            s = frozenset(combo)
            if any(f <= s for f in found):
                continue
            if not fan.in_some_cone(s):
                found.append(s)
    return _canonical_sets(found)


def cox_ideal(fan: FanData) -> MonomialIdeal:
    """``J = < ∏_{i ∉ σ} x_i : σ maximal >``, minimalized."""
    everything = frozenset(range(fan.nrays))
    return MonomialIdeal.from_supports([everything - c for c in fan.max_cones], fan.nrays)


def stanley_reisner_ideal(fan: FanData) -> MonomialIdeal:
    """Ideal generated by ``∏_{i ∈ S} x_i`` over primitive collections ``S``.

    Its zero set is not the exceptional set; that is the zero set of its
    Alexander dual, :func:`cox_ideal`.
    """
    return MonomialIdeal.from_supports(primitive_collections(fan), fan.nrays)


def weighted_projective_fan(weights: Sequence[int]) -> FanData:
    """Fan of weighted projective space from its Gale-dual rays."""
    rays = gale_dual_rays([(w,) for w in weights])
    n = len(weights)
    return FanData.make(rays, [frozenset(c) for c in itertools.combinations(range(n), n - 1)])

