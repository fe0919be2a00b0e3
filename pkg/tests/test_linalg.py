from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from waringsym import kernels
from waringsym.apolar import disjointness_matrix, disjointness_pattern, subset_label
from waringsym.linalg import (
    PRIMES,
    ExactMatrix,
    bareiss_rank,
    exact_rank,
    fraction_rank,
    mat_vec,
    rank_mod_p,
    solve_exact,
)

int_matrices = st.integers(0, 6).flatmap(
    lambda m: st.integers(0, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@settings(max_examples=200, deadline=None)
@given(int_matrices)
def test_bareiss_matches_fraction_elimination(rows):
    assert bareiss_rank(rows) == fraction_rank(rows)


@settings(max_examples=200, deadline=None)
@given(int_matrices)
def test_exact_rank_matches_fraction_elimination(rows):
    assert exact_rank(rows) == fraction_rank(rows)


@settings(max_examples=100, deadline=None)
@given(int_matrices, st.sampled_from([2, 3, 5, 7, PRIMES[0]]))
def test_modular_rank_is_lower_bound(rows, p):
    assert rank_mod_p(rows, p) <= fraction_rank(rows)


@settings(max_examples=100, deadline=None)
@given(int_matrices, st.sampled_from([2, 3, 7, 101]))
def test_backends_agree(rows, p):
    for backend in kernels.available_backends():
        assert rank_mod_p(rows, p, backend=backend) == rank_mod_p(rows, p, backend="python")


def test_compiled_backend_loaded():
    # the build is expected to produce the extension; the fallback still works without it
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    assert "cython" in kernels.available_backends()


def test_modular_rank_drops_for_small_prime():
    rows = [[2, 0], [0, 3]]
    assert rank_mod_p(rows, 2) == 1
    assert rank_mod_p(rows, 3) == 1
    assert exact_rank(rows) == 2


def test_exact_rank_falls_back_when_primes_fail():
    # every prime divides the determinant, so each modular rank is deficient
    det = 1
    for p in PRIMES:
        det *= p
    rows = [[1, 0], [0, det]]
    assert all(rank_mod_p(rows, p) == 1 for p in PRIMES)
    assert exact_rank(rows) == 2


def test_rational_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert exact_rank(rows) == 1
    assert exact_rank([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2


def test_huge_entries():
    big = 10 ** 40
    assert exact_rank([[big, big + 1], [big - 1, big]]) == 2
    assert exact_rank([[big, 2 * big], [1, 2]]) == 1


def test_empty():
    assert exact_rank(ExactMatrix((), (), ())) == 0
    assert exact_rank([]) == 0
    assert exact_rank(ExactMatrix.from_rows([[0, 0], [0, 0]])) == 0


@pytest.mark.parametrize("r,n", [(1, 2), (2, 4), (2, 5), (3, 6), (3, 7), (4, 9)])
def test_disjointness_rank_against_sympy(r, n):
    import sympy as sp

    D = disjointness_matrix(r, n)
    assert sp.Matrix(D.rows).rank() == exact_rank(D) == len(D.rows)


def test_kernel_on_numpy_input():
    a = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]], dtype=np.int64)
    for backend in kernels.available_backends():
        assert kernels.rank_mod_p_array(a, 7, backend=backend) == 2
    assert a[1, 0] == 2  # input untouched


def test_kernel_rejects_large_prime():
    with pytest.raises(ValueError):
        kernels.rank_mod_p_array([[1]], 2 ** 31 + 11)


class TestSolve:
    def test_consistent(self):
        A = [[1, 2], [3, 4], [5, 6]]
        b = [5, 11, 17]
        x = solve_exact(A, b)
        assert x == [1, 2]

    def test_inconsistent(self):
        assert solve_exact([[1, 1], [1, 1]], [1, 2]) is None

    def test_underdetermined(self):
        A = [[1, 1, 0]]
        x = solve_exact(A, [Fraction(1, 3)])
        assert mat_vec(A, x) == [Fraction(1, 3)]

    @settings(max_examples=100, deadline=None)
    @given(int_matrices, st.data())
    def test_solution_solves(self, rows, data):
        if not rows or not rows[0]:
            return
        xs = data.draw(st.lists(st.integers(-3, 3), min_size=len(rows[0]), max_size=len(rows[0])))
        b = mat_vec(rows, xs)
        x = solve_exact(rows, b)
        assert x is not None and mat_vec(rows, x) == b


class TestExactMatrix:
    def test_transpose_and_reorder(self):
        M = disjointness_pattern(4, 1, 2)
        T = M.transpose()
        assert T.shape == (6, 4)
        assert T.transpose() == M
        R = M.reorder(M.row_labels[::-1], M.col_labels)
        assert R.same_as(M) and R != M

    def test_csv_and_bitmap(self):
        M = disjointness_matrix(1, 2)
        assert M.to_bitmap() == "01\n10\n"
        assert M.to_csv(subset_label) == ",1,2\n1,0,1\n2,1,0\n"

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            ExactMatrix((0,), (0, 1), ((1,),))
