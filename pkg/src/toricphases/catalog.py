"""The fourteen one-parameter complete intersections in weighted projective space."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError
from .poly import MultiPoly, PolyRing
from .toric import GLSMModel, build_from_charges


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    ambient: str
    weights: tuple[int, ...]
    degrees: tuple[int, ...]

    def build(self) -> GLSMModel:
        return build_from_charges([(w,) for w in self.weights], [(d,) for d in self.degrees], label=self.name)


def _entry(degrees, weights) -> CatalogEntry:
    name = "X(" + ",".join(map(str, degrees)) + ")"
    ambient = f"P{len(weights) - 1}(" + "".join(map(str, weights)) + ")"
    return CatalogEntry(name, ambient, tuple(weights), tuple(degrees))


ENTRIES: tuple[CatalogEntry, ...] = (
    _entry((5,), (1, 1, 1, 1, 1)),
    _entry((6,), (1, 1, 1, 1, 2)),
    _entry((8,), (1, 1, 1, 1, 4)),
    _entry((10,), (1, 1, 1, 2, 5)),
    _entry((2, 4), (1, 1, 1, 1, 1, 1)),
    _entry((3, 3), (1, 1, 1, 1, 1, 1)),
    _entry((3, 4), (1, 1, 1, 1, 1, 2)),
    _entry((2, 6), (1, 1, 1, 1, 1, 3)),
    _entry((4, 4), (1, 1, 1, 1, 2, 2)),
    _entry((2, 12), (1, 1, 1, 1, 4, 6)),
    _entry((4, 6), (1, 1, 1, 2, 2, 3)),
    _entry((6, 6), (1, 1, 2, 2, 3, 3)),
    _entry((2, 2, 3), (1, 1, 1, 1, 1, 1, 1)),
    _entry((2, 2, 2, 2), (1, 1, 1, 1, 1, 1, 1, 1)),
)

ALIASES: dict[str, str] = {
    "quintic": "X(5)",
    "sextic": "X(6)",
    "octic": "X(8)",
    "dectic": "X(10)",
    "bicubic": "X(3,3)",
    "biquadric-quartic": "X(2,4)",
    "tetraquadric": "X(2,2,2,2)",
}

_BY_NAME = {e.name: e for e in ENTRIES}


def names() -> list[str]:
    return [e.name for e in ENTRIES]


def _canonical(name: str) -> str:
    key = re.sub(r"\s+", "", name)
    for alias, target in ALIASES.items():
        if key.lower() == alias:
            return target
    m = re.fullmatch(r"[Xx]\(?([\d,]+)\)?", key)
    if m:
        return "X(" + m.group(1) + ")"
    return key


def entry(name: str) -> CatalogEntry:
    key = _canonical(name)
    if key not in _BY_NAME:
        raise ValidationError(f"unknown catalog model {name!r}; known: {', '.join(names())}")
    return _BY_NAME[key]


def model(name: str) -> GLSMModel:
    return entry(name).build()


def all_models() -> list[GLSMModel]:
    return [e.build() for e in ENTRIES]


def fermat_sections(m: GLSMModel) -> list[MultiPoly]:
    """``G_a = Σ_{i : w_i | d_a} (i+1)^a x_i^{d_a / w_i}`` (``a`` counted from 0).

    The powers ``(i+1)^a`` keep the sections of equal degree distinct.
    """
    if m.k != 1:
        raise ValidationError("Fermat sections are defined for one-parameter models only")
    ring = PolyRing.from_model(m)
    out = []
    for a, (d,) in enumerate(m.degrees):
        terms = {}
        for i, (w,) in enumerate(m.weights):
            if d % w == 0:
                e = [0] * m.size
                e[i] = d // w
                terms[tuple(e)] = (i + 1) ** a
        if not terms:
            raise ValidationError(f"no Fermat monomial of degree {d}")
        out.append(MultiPoly(ring, terms))
    return out
