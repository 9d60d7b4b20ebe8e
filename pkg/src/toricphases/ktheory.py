"""K-theory images of the relations and ideal membership in ``ℚ[Pic]``.

A twist ``M^q`` acts on K-theory as multiplication by ``t^q`` and the shift
``[1]`` as ``-1``, so ``N(x_i)`` becomes ``(-1)^{ρ_i} t^{w_i} - 1``.  The
relations of a phase generate an ideal in the Laurent ring; membership is
decided with a Gröbner basis of its contraction to the polynomial ring.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import groebner as gb
from .laurent import LaurentElement
from .relations import RelationDescriptor, phase_relations, refined_geometric_relations
from .secondary import Phase
from .sparse import add_terms, mul_terms, order_key
from .toric import GLSMModel

INFINITE = math.inf


def relation_to_ktheory(r: RelationDescriptor) -> LaurentElement:
    """Normalized K-theory image ``∏ ((-1)^ρ t^w - 1)`` of a relation."""
    k = len(r.factors[0].degree)
    out = LaurentElement.constant(k, 1)
    for f in r.factors:
        out = out * (LaurentElement.t(f.degree, (-1) ** f.rgrade) - 1)
    return out.normalized()


@dataclass(frozen=True)
class RelationIdeal:
    phase_id: int
    k: int
    generators: tuple[LaurentElement, ...]
    order: str = "grlex"


def relation_ideal(model: GLSMModel, phase: Phase, *, refined: bool | None = None,
                   order: str = "grlex") -> RelationIdeal:
    """Ideal of K-theory relations of a phase.

    ``refined`` defaults to True in the geometric phase.
    """
    if refined is None:
        refined = phase.is_geometric
    rels = refined_geometric_relations(model, phase) if refined else phase_relations(model, phase)
    return ideal_from_relations(rels, model.k, phase.id, order=order)


def ideal_from_relations(rels: Sequence[RelationDescriptor], k: int, phase_id: int,
                         order: str = "grlex") -> RelationIdeal:
    gens = []
    for r in rels:
        if r.phase_id != phase_id:
            raise ValueError(f"relation from phase {r.phase_id} mixed into phase {phase_id}")
        g = relation_to_ktheory(r)
        if g not in gens:
            gens.append(g)
    return RelationIdeal(phase_id, k, tuple(gens), order)


# --- Gröbner machinery ----------------------------------------------------------


@dataclass(frozen=True)
class _Basis:
    k: int
    aux: bool  # an extra variable s with s * t_1 ... t_k = 1 was adjoined
    elements: tuple[dict, ...]  # reduced basis of the contraction, in k variables
    reps: tuple[tuple[dict, ...], ...]  # cofactors over the original generators (k+aux vars)
    order: str


def _elim_key(order: str):
    base = order_key(order)
    return lambda e: (e[-1], base(e[:-1]))


_cache: dict = {}


def _basis(ideal: RelationIdeal) -> _Basis:
    key = (ideal.k, ideal.generators, ideal.order)
    if key in _cache:
        return _cache[key]
    k = ideal.k
    gens = [dict(g.normalized().items()) for g in ideal.generators]
    if k == 1:
        elems, reps = gb.groebner(gens, order_key(ideal.order), k)
        out = _Basis(k, False, tuple(elems), tuple(tuple(r) for r in reps), ideal.order)
    else:
        lifted = [{e + (0,): c for e, c in g.items()} for g in gens]
        lifted.append({(1,) * (k + 1): Fraction(1), (0,) * (k + 1): Fraction(-1)})
        elems, reps = gb.groebner(lifted, _elim_key(ideal.order), k + 1)
        keep = [i for i, g in enumerate(elems) if all(e[-1] == 0 for e in g)]
        tkey = order_key(ideal.order)
        contracted = [{e[:-1]: c for e, c in elems[i].items()} for i in keep]
        # the s-free part of an elimination basis is a Gröbner basis; sort it
        order = sorted(range(len(keep)), key=lambda j: tkey(gb.lead(contracted[j], tkey)[0]), reverse=True)
        out = _Basis(
            k,
            True,
            tuple(contracted[j] for j in order),
            tuple(tuple(reps[keep[j]]) for j in order),
            ideal.order,
        )
    _cache[key] = out
    return out


def groebner_basis(gens: Sequence[LaurentElement], order: str = "grlex") -> list[LaurentElement]:
    """Reduced Gröbner basis of the Laurent ideal, contracted to ``ℚ[t]``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    k = gens[0].k
    ideal = RelationIdeal(-1, k, tuple(g.normalized() for g in gens), order)
    return [LaurentElement(k, e) for e in _basis(ideal).elements]


@dataclass(frozen=True)
class Certificate:
    """``f == Σ cofactors[i] * generators[i]`` in the Laurent ring."""

    generators: tuple[LaurentElement, ...]
    cofactors: tuple[LaurentElement, ...]

    def expand(self) -> LaurentElement:
        k = self.generators[0].k if self.generators else 0
        total = LaurentElement(k, {})
        for c, g in zip(self.cofactors, self.generators):
            total = total + c * g
        return total


def _to_laurent(terms: dict, k: int, aux: bool) -> LaurentElement:
    if not aux:
        return LaurentElement(k, terms)
    out: dict = {}
    for e, c in terms.items():
        s = e[-1]
        q = tuple(x - s for x in e[:-1])
        out = add_terms(out, {q: c})
    return LaurentElement(k, out)


def reduce(f: LaurentElement, ideal: RelationIdeal) -> tuple[LaurentElement, list[dict], LaurentElement]:
    """Normal form of ``f`` modulo the ideal.

    Returns ``(unit, quotients, remainder)`` where ``unit * f`` is the
    polynomial that was divided.
    """
    basis = _basis(ideal)
    shift = tuple(min([0] + [e[j] for e in f.terms]) for j in range(f.k))
    unit = LaurentElement.t(tuple(-s for s in shift))
    g = unit * f
    q, r = gb.divide(dict(g.items()), list(basis.elements), order_key(ideal.order))
    return unit, q, LaurentElement(f.k, r)


def normal_form(f: LaurentElement, ideal: RelationIdeal) -> LaurentElement:
    """Remainder of ``f`` (made polynomial by a monomial unit only if needed)."""
    return reduce(f, ideal)[2]


def ideal_member(f: LaurentElement, ideal: RelationIdeal) -> tuple[bool, Certificate | None]:
    """Decide ``f ∈ ideal`` and, if so, return cofactors reconstructing ``f``."""
    if f.is_zero():
        return True, Certificate(ideal.generators, tuple(LaurentElement(ideal.k, {}) for _ in ideal.generators))
    if not ideal.generators:
        return False, None
    basis = _basis(ideal)
    unit, q, r = reduce(f, ideal)
    if not r.is_zero():
        return False, None
    k = ideal.k
    ngen = len(ideal.generators)
    nv = k + (1 if basis.aux else 0)
    cof = [dict() for _ in range(ngen)]
    for qj, rep in zip(q, basis.reps):
        if not qj:
            continue
        lifted = {e + (0,) * (nv - k): c for e, c in qj.items()}
        for i in range(ngen):
            if rep[i]:
                cof[i] = add_terms(cof[i], mul_terms(lifted, rep[i]))
    inv_unit = unit ** -1
    # generators were normalized by a unit as well
    cofactors = []
    for i, g in enumerate(ideal.generators):
        u_i, _ = g.normalize()
        c = _to_laurent(cof[i], k, basis.aux) * inv_unit * (u_i ** -1)
        cofactors.append(c)
    cert = Certificate(ideal.generators, tuple(cofactors))
    if cert.expand() != f:
        raise AssertionError("membership certificate does not re-expand")  # pragma: no cover
    return True, cert


def quotient_rank(ideal: RelationIdeal) -> int | float:
    """``dim_ℚ`` of the quotient ring, or :data:`INFINITE`."""
    if not ideal.generators:
        return INFINITE
    basis = _basis(ideal)
    k = ideal.k
    key = order_key(ideal.order)
    leads = [gb.lead(g, key)[0] for g in basis.elements]
    if any(not any(e) for e in leads):
        return 0
    caps = []
    for j in range(k):
        pure = [e[j] for e in leads if all(x == 0 for i, x in enumerate(e) if i != j)]
        if not pure:
            return INFINITE
        caps.append(min(pure))
    return sum(
        1
        for e in itertools.product(*(range(c) for c in caps))
        if not any(gb.divides(le, e) for le in leads)
    )


def unipotence_check(model: GLSMModel, phase: Phase, bound: int, *, refined: bool | None = None,
                     order: str = "grlex") -> tuple[bool, ...]:
    """For each Picard generator ``e_j``, whether ``(t^{e_j} - 1)^bound`` lies in the ideal."""
    ideal = relation_ideal(model, phase, refined=refined, order=order)
    out = []
    for j in range(model.k):
        e = tuple(int(i == j) for i in range(model.k))
        f = (LaurentElement.t(e) - 1) ** bound
        out.append(ideal_member(f, ideal)[0])
    return tuple(out)
