"""Exact integer and rational linear algebra.

Everything here works on Python ``int`` and :class:`fractions.Fraction`, so
there is no overflow and no rounding.  Matrices are immutable
:class:`IntMatrix` values; the functions also accept plain nested
sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoIntegerSolution

RationalVector = tuple  # tuple[Fraction, ...], always reduced (Fraction normalizes)


def rational_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with row-major entries."""

    entries: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(self.col(j) for j in range(self.ncols)), self.nrows)

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        other = as_matrix(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
            other.ncols,
        )

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def as_matrix(a) -> IntMatrix:
    if isinstance(a, IntMatrix):
        return a
    return IntMatrix.from_rows(a)


# --- determinants and ranks ------------------------------------------------


def det(a) -> int:
    """Bareiss fraction-free determinant."""
    a = as_matrix(a)
    n = a.nrows
    if n != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in a.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(a) -> int:
    rows = a.entries if isinstance(a, IntMatrix) else a
    return len(rref(rows)[1])


def solve_rational(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of ``a x = b`` (free variables set to 0), or None."""
    if not a:
        return () if not any(b) else None
    ncols = len(a[0])
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(m, pivots):
        x[c] = row[-1]
    return tuple(x)


# --- normal forms ---------------------------------------------------------


def _swap(m, i, j):
    m[i], m[j] = m[j], m[i]


def _addrow(m, dst, src, f):
    # row_dst += f * row_src
    if f:
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]


def hermite_normal_form(a) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  ``H`` is in
    row echelon form, each pivot is positive and the entries above a pivot
    lie in ``[0, pivot)``.  Zero rows are at the bottom.
    """
    a = as_matrix(a)
    m, n = a.shape
    h = [list(r) for r in a.entries]
    u = [list(r) for r in IntMatrix.identity(m).entries]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(h[i][c]), i))
            if p != r:
                _swap(h, p, r)
                _swap(u, p, r)
            done = True
            for i in range(r + 1, m):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    _addrow(h, i, r, -q)
                    _addrow(u, i, r, -q)
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            _addrow(h, i, r, -q)
            _addrow(u, i, r, -q)
        r += 1
    return IntMatrix.from_rows(h, n), IntMatrix.from_rows(u, m)


def smith_normal_form(a) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(D, U, V)`` with ``U @ A @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative
    invariant factors ``d_1 | d_2 | ...``.  Pivots are chosen by smallest
    absolute value, lowest (row, column) index first, so the output is a
    deterministic function of the input.
    """
    a = as_matrix(a)
    m, n = a.shape
    d = [list(r) for r in a.entries]
    u = [list(r) for r in IntMatrix.identity(m).entries]
    v = [list(r) for r in IntMatrix.identity(n).entries]  # rows of V^T

    def colop(dst, src, f):
        for row in d:
            row[dst] += f * row[src]
        _addrow(v, dst, src, f)

    def colswap(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        _swap(v, i, j)

    for t in range(min(m, n)):
        while True:
            cand = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not cand:
                break
            _, i, j = min(cand)
            if i != t:
                _swap(d, i, t)
                _swap(u, i, t)
            if j != t:
                colswap(j, t)
            piv = d[t][t]
            clean = True
            for i in range(t + 1, m):
                q = d[i][t] // piv
                if q:
                    _addrow(d, i, t, -q)
                    _addrow(u, i, t, -q)
                clean &= d[i][t] == 0
            for j in range(t + 1, n):
                q = d[t][j] // piv
                if q:
                    colop(j, t, -q)
                clean &= d[t][j] == 0
            if not clean:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # pull the offending row into row t and redo the pivot
            _addrow(d, t, bad[0], 1)
            _addrow(u, t, bad[0], 1)
        if t < m and t < n and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    vt = IntMatrix.from_rows(v, n)
    return IntMatrix.from_rows(d, n), IntMatrix.from_rows(u, m), vt.transpose()


def invariant_factors(a) -> tuple[int, ...]:
    dmat, _, _ = smith_normal_form(a)
    return tuple(dmat[i, i] for i in range(min(dmat.shape)) if dmat[i, i] != 0)


def kernel_basis(a) -> list[tuple[int, ...]]:
    """A ℤ-basis of ``{x : A x = 0}``, returned in Hermite normal form."""
    a = as_matrix(a)
    h, u = hermite_normal_form(a.transpose())
    basis = [u.row(i) for i in range(h.nrows) if not any(h.row(i))]
    if not basis:
        return []
    hk, _ = hermite_normal_form(basis)
    return [r for r in hk.entries if any(r)]


def solve_linear_integer(a, b: Sequence[int]) -> tuple[int, ...]:
    """Some integer ``x`` with ``A x = b``.

    Raises :class:`NoIntegerSolution` if ``b`` is not in the integer image
    of ``A``.
    """
    a = as_matrix(a)
    m, n = a.shape
    if len(b) != m:
        raise ValueError("right-hand side has the wrong length")
    dmat, u, v = smith_normal_form(a)
    c = u.apply(b)
    y = [0] * n
    for i in range(m):
        di = dmat[i, i] if i < n else 0
        if di == 0:
            if c[i] != 0:
                raise NoIntegerSolution(f"{list(b)} is not in the rational image")
        elif c[i] % di:
            raise NoIntegerSolution(f"{list(b)} is not in the integer image")
        else:
            y[i] = c[i] // di
    return v.apply(y)


def is_unimodular(a) -> bool:
    return abs(det(a)) == 1
