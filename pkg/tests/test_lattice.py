from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from toricphases import lattice
from toricphases.errors import NoIntegerSolution
from toricphases.lattice import IntMatrix


def matrices(max_rows=4, max_cols=4, bound=20):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def test_hnf_spec_example():
    a = [[2, 4], [1, 3]]
    h, u = lattice.hermite_normal_form(a)
    assert (u @ IntMatrix.from_rows(a)) == h
    assert abs(lattice.det(u)) == 1
    # upper triangular, positive pivots, entries above a pivot reduced into [0, pivot)
    assert h.tolist() == [[1, 1], [0, 2]]


def test_hnf_trivial_cases():
    h, u = lattice.hermite_normal_form(IntMatrix.identity(3))
    assert h == IntMatrix.identity(3) and u == IntMatrix.identity(3)
    h, u = lattice.hermite_normal_form(IntMatrix.zeros(2, 2))
    assert h.is_zero() and u == IntMatrix.identity(2)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hnf_properties(rows):
    a = IntMatrix.from_rows(rows)
    h, u = lattice.hermite_normal_form(a)
    assert u @ a == h
    assert abs(lattice.det(u)) == 1
    last = -1
    for i in range(h.nrows):
        nz = [j for j in range(h.ncols) if h[i, j]]
        if not nz:
            assert all(not any(h.row(r)) for r in range(i, h.nrows))
            break
        p = nz[0]
        assert p > last and h[i, p] > 0
        for r in range(i):
            assert 0 <= h[r, p] < h[i, p]
        last = p


@pytest.mark.parametrize(
    "a, diag",
    [([[2, 0], [0, 3]], [1, 6]), ([[1, 0], [0, 1]], [1, 1]), ([[5]], [5]), ([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28]], [1, 10, 30])],
)
def test_snf_examples(a, diag):
    d, u, v = lattice.smith_normal_form(a)
    assert u @ IntMatrix.from_rows(a) @ v == d
    assert [d[i, i] for i in range(len(diag))] == diag


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_against_sympy(rows):
    a = IntMatrix.from_rows(rows)
    d, u, v = lattice.smith_normal_form(a)
    assert u @ a @ v == d
    assert abs(lattice.det(u)) == 1 and abs(lattice.det(v)) == 1
    diag = [d[i, i] for i in range(min(d.shape))]
    assert all(d[i, j] == 0 for i in range(d.nrows) for j in range(d.ncols) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    oracle = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
    odiag = sorted(abs(int(oracle[i, i])) for i in range(min(oracle.shape)))
    assert sorted(diag) == odiag


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4, 6))
def test_det_and_rank_against_sympy(rows):
    m = sympy.Matrix(rows)
    assert lattice.rank(rows) == m.rank()
    if len(rows) == len(rows[0]):
        assert lattice.det(rows) == m.det()


def test_kernel_quintic_row():
    basis = lattice.kernel_basis([[1, 1, 1, 1, 1, -5]])
    assert len(basis) == 5
    for b in basis:
        assert sum(b[:5]) - 5 * b[5] == 0
    assert lattice.invariant_factors(basis) == (1,) * 5


def test_kernel_trivial_cases():
    assert lattice.kernel_basis([[2, 1], [1, 1]]) == []
    basis = lattice.kernel_basis(IntMatrix.zeros(1, 3))
    assert sorted(basis) == sorted([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@settings(max_examples=100, deadline=None)
@given(matrices(3, 5, 9))
def test_kernel_properties(rows):
    a = IntMatrix.from_rows(rows)
    basis = lattice.kernel_basis(a)
    assert len(basis) == a.ncols - lattice.rank(rows)
    for b in basis:
        assert not any(a.apply(b))
    if basis:
        # saturated: the basis spans a primitive sublattice
        assert set(lattice.invariant_factors(basis)) == {1}


def test_solve_linear_integer():
    x = lattice.solve_linear_integer([[1, 1, 1, 1, 1]], [5])
    assert sum(x) == 5
    with pytest.raises(NoIntegerSolution):
        lattice.solve_linear_integer([[2]], [1])
    assert lattice.solve_linear_integer(IntMatrix.identity(3), [4, -2, 7]) == (4, -2, 7)


@settings(max_examples=100, deadline=None)
@given(matrices(3, 4, 9), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve_linear_integer_roundtrip(rows, x):
    a = IntMatrix.from_rows(rows)
    x = x[: a.ncols] + [0] * (a.ncols - len(x))
    b = a.apply(x)
    y = lattice.solve_linear_integer(a, b)
    assert a.apply(y) == b


def test_solve_rational():
    assert lattice.solve_rational([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert lattice.solve_rational([[1, 1], [1, 1]], [1, 2]) is None


def test_no_overflow_on_large_entries():
    big = 10**40
    d, u, v = lattice.smith_normal_form([[big, 0], [0, big * 3]])
    assert (d[0, 0], d[1, 1]) == (big, 3 * big)
