"""Relations among the twist autoequivalences of a phase.

For a coordinate ``x_i`` of degree ``w_i`` and R-grade ``ρ_i`` write
``N(x_i)(-) = Cone(x_i : - -> M^{w_i}(-)[ρ_i])``.  In a phase, every
minimal exceptional set ``S`` gives ``∘_{i∈S} N(x_i) ≅ 0``; a singleton
``S = {i}`` is the statement ``M^{w_i} ≅ [-ρ_i]``.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotGeometricPhase, ValidationError
from .secondary import Phase
from .toric import GLSMModel


class RelationKind(str, enum.Enum):
    COMPOSITE_VANISHING = "CompositeVanishing"
    RAY_EQUIVALENCE = "RayEquivalence"


@dataclass(frozen=True)
class Factor:
    index: int
    degree: tuple[int, ...]
    rgrade: int


@dataclass(frozen=True)
class Provenance:
    kind: str  # "MinimalExceptionalSet" | "RefinedRegularSequence"
    source: frozenset
    subset: frozenset | None = None


@dataclass(frozen=True)
class RelationDescriptor:
    phase_id: int
    kind: RelationKind
    factors: tuple[Factor, ...]
    provenance: Provenance
    names: tuple[str, ...] = field(default=(), compare=False)
    multiplicity: int = 1
    genericity_assumed: bool = False

    def __post_init__(self):
        if self.kind is RelationKind.RAY_EQUIVALENCE and len(self.factors) != 1:
            raise ValueError("a ray equivalence has exactly one factor")
        if self.kind is RelationKind.COMPOSITE_VANISHING and len(self.factors) < 2:
            raise ValueError("a composite vanishing relation needs at least two factors")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(f.index for f in self.factors)

    @property
    def degree_multiset(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(f.degree for f in self.factors))

    def to_dict(self) -> dict:
        return {
            "phase_id": self.phase_id,
            "kind": self.kind.value,
            "factors": [
                {"index": f.index, "name": self._name(f.index), "degree": list(f.degree), "rgrade": f.rgrade}
                for f in self.factors
            ],
            "provenance": {
                "kind": self.provenance.kind,
                "set": sorted(self.provenance.source),
                "subset": None if self.provenance.subset is None else sorted(self.provenance.subset),
            },
            "multiplicity": self.multiplicity,
            "genericity_assumed": self.genericity_assumed,
            "text": render_relation(self),
        }

    @classmethod
    def from_dict(cls, data: dict) -> RelationDescriptor:
        names = {f["index"]: f.get("name") for f in data["factors"]}
        size = max(names) + 1 if names else 0
        prov = data["provenance"]
        return cls(
            phase_id=data["phase_id"],
            kind=RelationKind(data["kind"]),
            factors=tuple(Factor(f["index"], tuple(f["degree"]), f["rgrade"]) for f in data["factors"]),
            provenance=Provenance(
                prov["kind"],
                frozenset(prov["set"]),
                None if prov["subset"] is None else frozenset(prov["subset"]),
            ),
            names=tuple(names.get(i) or f"z{i + 1}" for i in range(size)),
            multiplicity=data.get("multiplicity", 1),
            genericity_assumed=data.get("genericity_assumed", False),
        )

    def _name(self, i: int) -> str:
        return self.names[i] if i < len(self.names) else f"z{i + 1}"


def _factor(model: GLSMModel, i: int) -> Factor:
    return Factor(i, model.charges[i], model.rgrades[i])


def phase_relations(model: GLSMModel, phase: Phase) -> list[RelationDescriptor]:
    """One relation per minimal exceptional set of ``phase``."""
    out = []
    for s in phase.minimal_exceptional_sets:
        kind = RelationKind.RAY_EQUIVALENCE if len(s) == 1 else RelationKind.COMPOSITE_VANISHING
        out.append(
            RelationDescriptor(
                phase_id=phase.id,
                kind=kind,
                factors=tuple(_factor(model, i) for i in sorted(s)),
                provenance=Provenance("MinimalExceptionalSet", s),
                names=model.names,
            )
        )
    return out


def refined_geometric_relations(model: GLSMModel, phase: Phase) -> list[RelationDescriptor]:
    """Shorter vanishing relations in the geometric phase.

    On the complete intersection, ``dim X + 1`` generic sections from a
    primitive collection already have no common zero, so every subset of
    that size gives a vanishing composite.  Subsets are deduplicated by
    their degree multiset; ``multiplicity`` counts how many were merged.
    """
    if not phase.is_geometric:
        raise NotGeometricPhase(f"phase {phase.id} is not the geometric phase")
    if model.dimX < 0:
        raise ValidationError(f"expected dimension {model.dimX} is negative; the sections cannot be a regular sequence")
    size = model.dimX + 1
    out = []
    for s in phase.minimal_exceptional_sets:
        if len(s) <= size:
            subsets = [tuple(sorted(s))]
        else:
            subsets = list(itertools.combinations(sorted(s), size))
        counts = Counter(tuple(sorted(model.charges[i] for i in sub)) for sub in subsets)
        seen = set()
        for sub in subsets:
            ms = tuple(sorted(model.charges[i] for i in sub))
            if ms in seen:
                continue
            seen.add(ms)
            kind = RelationKind.RAY_EQUIVALENCE if len(sub) == 1 else RelationKind.COMPOSITE_VANISHING
            out.append(
                RelationDescriptor(
                    phase_id=phase.id,
                    kind=kind,
                    factors=tuple(_factor(model, i) for i in sub),
                    provenance=Provenance("RefinedRegularSequence", s, frozenset(sub)),
                    names=model.names,
                    multiplicity=counts[ms],
                    genericity_assumed=True,
                )
            )
    return out


def _fmt_degree(q: Sequence[int]) -> str:
    if len(q) == 1:
        return str(q[0])
    return "(" + ",".join(str(x) for x in q) + ")"


def _power(q: Sequence[int]) -> str:
    text = _fmt_degree(q)
    return f"M^{text}" if len(q) == 1 and q[0] >= 0 else f"M^{{{text}}}"


def ray_relation_text(r: RelationDescriptor, *, positive: bool = False) -> str:
    """``M^{w} ≅ [-ρ]``; with ``positive=True`` the inverse form is used when ``w <= 0``."""
    (f,) = r.factors
    q, shift = f.degree, -f.rgrade
    if positive and (q[0] if len(q) == 1 else next((x for x in q if x), 0)) < 0:
        q, shift = tuple(-x for x in q), -shift
    return f"{_power(q)} ≅ [{shift}]"


def render_relation(r: RelationDescriptor) -> str:
    """Human-readable form of a relation."""
    if r.kind is RelationKind.RAY_EQUIVALENCE:
        text = ray_relation_text(r)
        flipped = ray_relation_text(r, positive=True)
        if flipped != text:
            text += f"  (equivalently {flipped})"
        return text
    body = " ∘ ".join(f"N({r._name(f.index)})" for f in r.factors)
    degs = ", ".join(_fmt_degree(f.degree) for f in r.factors)
    grades = ", ".join(str(f.rgrade) for f in r.factors)
    text = f"{body} ≅ 0  [degrees {degs}; R-grades {grades}]"
    if r.multiplicity > 1:
        text += f"  x{r.multiplicity}"
    return text
