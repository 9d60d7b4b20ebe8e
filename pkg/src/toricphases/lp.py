"""Exact two-phase simplex over the rationals (Bland's rule, no cycling)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)

    def pivot(self, r, j, obj):
        row = self.rows[r]
        inv = 1 / row[j]
        row[:] = [x * inv for x in row]
        for i, other in enumerate(self.rows):
            if i != r and other[j] != 0:
                f = other[j]
                other[:] = [x - f * y for x, y in zip(other, row)]
        if obj[j] != 0:
            f = obj[j]
            obj[:] = [x - f * y for x, y in zip(obj, row)]
        self.basis[r] = j

    def reduced_costs(self, cost):
        obj = list(cost) + [Fraction(0)]
        for r, b in enumerate(self.basis):
            if obj[b] != 0:
                f = obj[b]
                obj[:] = [x - f * y for x, y in zip(obj, self.rows[r])]
        return obj

    def optimize(self, obj, allowed):
        while True:
            j = next((j for j in allowed if obj[j] > 0), None)
            if j is None:
                return "optimal"
            best = None
            for r, row in enumerate(self.rows):
                if row[j] > 0:
                    key = (row[-1] / row[j], self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return "unbounded"
            self.pivot(best[1], j, obj)


def linprog(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Maximize ``c @ x`` subject to ``a_eq @ x == b_eq`` and ``x >= 0``."""
    n = len(c)
    rows, rhs = [], []
    for r, b in zip(a_eq, b_eq):
        r = [Fraction(x) for x in r]
        b = Fraction(b)
        if b < 0:
            r, b = [-x for x in r], -b
        rows.append(r)
        rhs.append(b)
    m = len(rows)
    # phase 1: one artificial per row
    art = [[Fraction(int(i == k)) for k in range(m)] for i in range(m)]
    tab = _Tableau([r + a for r, a in zip(rows, art)], rhs, range(n, n + m))
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    obj = tab.reduced_costs(cost1)
    tab.optimize(obj, range(n + m))
    if obj[-1] != 0:  # -(phase-1 optimum) = sum of artificials
        return LPResult("infeasible")
    # drive remaining artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n:
            j = next((j for j in range(n) if tab.rows[r][j] != 0), None)
            if j is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, j, obj)
        r += 1
    tab.rows = [row[:n] + row[-1:] for row in tab.rows]
    obj = tab.reduced_costs([Fraction(x) for x in c])
    status = tab.optimize(obj, range(n))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for r, b in enumerate(tab.basis):
        x[b] = tab.rows[r][-1]
    return LPResult("optimal", tuple(x), -obj[-1])


def feasible_point(a_eq: Sequence[Sequence], b_eq: Sequence, nvars: int) -> tuple[Fraction, ...] | None:
    res = linprog([0] * nvars, a_eq, b_eq)
    return res.x if res.status == "optimal" else None
