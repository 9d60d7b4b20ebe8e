"""Polynomials over the Cox ring of the total space, with ℤ^k × R gradings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .sparse import SparsePoly, parse_terms

Degree = tuple  # (q: tuple[int, ...], r: int)


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    degrees: tuple[tuple[int, ...], ...]
    rgrades: tuple[int, ...]

    def __post_init__(self):
        if not (len(self.names) == len(self.degrees) == len(self.rgrades)):
            raise ValueError("names, degrees and R-grades must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")

    @classmethod
    def make(cls, names, degrees, rgrades=None) -> PolyRing:
        degrees = tuple(tuple(int(x) for x in d) for d in degrees)
        rgrades = tuple(rgrades) if rgrades is not None else (0,) * len(degrees)
        return cls(tuple(names), degrees, rgrades)

    @classmethod
    def from_model(cls, model) -> PolyRing:
        return cls(tuple(model.names), tuple(model.charges), tuple(model.rgrades))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def k(self) -> int:
        return len(self.degrees[0]) if self.degrees else 0

    def zero_degree(self) -> Degree:
        return ((0,) * self.k, 0)

    def monomial_degree(self, e) -> Degree:
        q = tuple(sum(x * d[j] for x, d in zip(e, self.degrees)) for j in range(self.k))
        return q, sum(x * r for x, r in zip(e, self.rgrades))

    def var(self, name: str) -> MultiPoly:
        i = self.names.index(name)
        return MultiPoly(self, {tuple(int(j == i) for j in range(self.nvars)): 1})

    def gens(self) -> tuple[MultiPoly, ...]:
        return tuple(self.var(n) for n in self.names)

    def const(self, c) -> MultiPoly:
        return MultiPoly(self, {(0,) * self.nvars: c})

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def parse(self, text: str, field: str | None = None) -> MultiPoly:
        return MultiPoly(self, parse_terms(text, self.names, field=field))


def add_degrees(a: Degree, b: Degree, scale: int = 1) -> Degree:
    return tuple(x + scale * y for x, y in zip(a[0], b[0])), a[1] + scale * b[1]


class MultiPoly(SparsePoly):
    __slots__ = ("ring",)

    def __init__(self, ring: PolyRing, terms: Mapping | None = None):
        self.ring = ring
        super().__init__(ring.nvars, terms)

    def _new(self, terms):
        return MultiPoly(self.ring, terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly) and other.ring != self.ring:
            raise ValueError("polynomials live in different rings")
        return super()._coerce(other)

    def degree(self) -> Degree | None:
        """``(q, r)`` if homogeneous, else None.  The zero polynomial has no degree."""
        degs = {self.ring.monomial_degree(e) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree() is not None

    def __str__(self) -> str:
        return self.format(self.ring.names)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class PolyMatrix:
    """Dense matrix of :class:`MultiPoly` entries."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring: PolyRing, rows: Sequence[Sequence], ncols: int | None = None):
        self.ring = ring
        self.rows = tuple(
            tuple(x if isinstance(x, MultiPoly) else ring.const(Fraction(x)) for x in r) for r in rows
        )
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, ring, nrows, ncols) -> PolyMatrix:
        z = ring.zero()
        return cls(ring, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n, scalar=None) -> PolyMatrix:
        one = scalar if scalar is not None else ring.const(1)
        z = ring.zero()
        return cls(ring, [[one if i == j else z for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> MultiPoly:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = z
                for a, bi in zip(r, other.rows):
                    if a and bi[j]:
                        acc = acc + a * bi[j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out, other.ncols)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self) -> PolyMatrix:
        return PolyMatrix(self.ring, [[-a for a in r] for r in self.rows], self.ncols)

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def scale(self, c) -> PolyMatrix:
        return PolyMatrix(self.ring, [[a * c for a in r] for r in self.rows], self.ncols)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def replace(self, i: int, j: int, value) -> PolyMatrix:
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return PolyMatrix(self.ring, rows, self.ncols)

    def tolist(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.tolist()})"
