from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartankit import linalg
from cartankit.errors import DimensionMismatch

small_entries = st.integers(min_value=-4, max_value=4)


def small_matrix(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def test_rref_known_form():
    m = linalg.rref([[0, 2, 4], [1, 1, 1]])
    assert m == ((F(1), F(0), F(-1)), (F(0), F(1), F(2)))
    assert linalg.pivot_columns(m) == (0, 1)


def test_rref_drops_zero_rows():
    assert linalg.rref([[0, 0], [0, 0]]) == ()
    assert linalg.rref([]) == ()


@given(small_matrix())
def test_rref_idempotent(rows):
    once = linalg.rref(rows)
    assert linalg.rref(once) == once


@given(small_matrix(), small_entries, st.integers(0, 3), st.integers(0, 3))
def test_rref_invariant_under_row_operations(rows, scale, i, j):
    base = linalg.rref(rows)
    work = [list(map(F, r)) for r in rows]
    i, j = i % len(work), j % len(work)
    if i != j:
        work[i] = [a + scale * b for a, b in zip(work[i], work[j])]
    work.append([F(scale) * e for e in work[0]])
    assert linalg.rref(work) == base


def test_residual_and_membership():
    rows = linalg.rref([[1, 0, 1], [0, 1, 2]])
    assert linalg.in_row_space([2, 3, 8], rows)
    assert not linalg.in_row_space([0, 0, 1], rows)
    assert linalg.residual([2, 3, 8], rows) == (F(0), F(0), F(0))


def test_row_coordinates_roundtrip():
    rows = linalg.rref([[1, 2, 0], [0, 0, 1]])
    coords = linalg.row_coordinates([3, 6, 5], rows)
    assert coords == (F(3), F(5))
    assert linalg.row_coordinates([1, 0, 0], rows) is None


def test_kernel_of_known_system():
    # x + 2y - z = 0 has kernel spanned by (-2,1,0) and (1,0,1)
    ker = linalg.kernel([[1, 2, -1]])
    assert ker == linalg.rref([[-2, 1, 0], [1, 0, 1]])
    for row in ker:
        assert sum(c * x for c, x in zip([1, 2, -1], row)) == 0


def test_kernel_needs_width_for_empty_system():
    assert linalg.kernel([], width=3) == linalg.identity(3)
    with pytest.raises(DimensionMismatch):
        linalg.kernel([])


@given(small_matrix())
def test_kernel_rank_nullity(rows):
    width = len(rows[0])
    ker = linalg.kernel(rows)
    assert linalg.rank(rows) + len(ker) == width
    for k in ker:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in rows)


def test_solve_particular_solution():
    sol = linalg.solve([[1, 1, 0], [0, 1, 1]], [3, 5])
    assert sol is not None
    assert sol[0] + sol[1] == 3 and sol[1] + sol[2] == 5


def test_solve_inconsistent_returns_none():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_empty_system_uses_width():
    assert linalg.solve([], [], width=4) == linalg.zero_vec(4)


def test_det_exact():
    # 3x3 determinant cross-checked by the rule of Sarrus
    m = linalg.mat([[2, 0, 1], [1, 3, 0], [0, 1, 4]])
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    sarrus = a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h
    assert linalg.det(m) == sarrus == F(25)


def test_char_poly_companion():
    # companion matrix of t^2 - t - 1
    m = linalg.mat([[0, 1], [1, 1]])
    assert linalg.char_poly(m) == (F(-1), F(-1), F(1))


def test_mat_pow_and_nilpotency():
    n = linalg.mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert linalg.mat_pow(n, 3) == linalg.zero_mat(3, 3)
    assert linalg.is_nilpotent_mat(n)
    assert not linalg.is_nilpotent_mat(linalg.identity(2))


def test_poly_gcd_and_squarefree():
    # (t-1)^2 (t+2) has squarefree part (t-1)(t+2) = t^2 + t - 2
    p = linalg.poly_mul(linalg.poly_mul((F(-1), F(1)), (F(-1), F(1))), (F(2), F(1)))
    assert linalg.squarefree_part(p) == (F(-2), F(1), F(1))


def test_semisimple_part_of_jordan_block():
    # [[2,1],[0,2]] has semisimple part 2*I and nilpotent part [[0,1],[0,0]]
    m = linalg.mat([[2, 1], [0, 2]])
    s = linalg.semisimple_part(m)
    assert s == linalg.mat([[2, 0], [0, 2]])
    assert linalg.is_nilpotent_mat(linalg.mat_add(m, linalg.mat_scale(F(-1), s)))


def test_semisimple_part_fixes_diagonalizable():
    m = linalg.mat([[0, -1], [1, 0]])  # eigenvalues +-i, already semisimple
    assert linalg.semisimple_part(m) == m


@given(small_matrix(max_rows=3, max_cols=3).filter(lambda r: len(r) == len(r[0])))
@settings(max_examples=40, deadline=None)
def test_semisimple_part_properties(rows):
    m = linalg.mat(rows)
    s = linalg.semisimple_part(m)
    n = linalg.mat_add(m, linalg.mat_scale(F(-1), s))
    assert linalg.is_nilpotent_mat(n)
    # s is a polynomial in m, so the parts commute
    assert linalg.mat_mul(s, n) == linalg.mat_mul(n, s)
