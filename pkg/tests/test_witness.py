from fractions import Fraction
from itertools import combinations

import pytest

from waringsym.decomp import SignedLinearForm, decompose_even, decompose_odd
from waringsym.linalg import exact_rank
from waringsym.poly import DomainError, Polynomial, elementary_symmetric, expand_linear_power
from waringsym.witness import (
    SignPointSet,
    check_certificate,
    colex_combinations,
    identity_check,
    power_span_matrix,
    proposition_search,
    span_membership,
)


class TestIdentity:
    @pytest.mark.parametrize("n", range(1, 12))
    def test_k0(self, n):
        rep = identity_check(0, n)
        assert rep.lhs == rep.rhs == n

    def test_small(self):
        rep = identity_check(1, 3)
        assert (rep.lhs, rep.rhs) == (27 - 3, 24)
        rep = identity_check(1, 4)
        assert (rep.lhs, rep.rhs) == (2 * 64 - 4 * 8, 96)

    def test_equals_all_ones_evaluation(self):
        # the identity is the decomposition evaluated at (1, ..., 1)
        for k in range(0, 4):
            for n in range(2 * k + 1, 10):
                dec = decompose_odd(2 * k + 1, n)
                rhs = sum(w * f.coefficient_sum() ** dec.d for w, f in dec.summands)
                assert rhs == identity_check(k, n).lhs

    def test_domain(self):
        with pytest.raises(DomainError):
            identity_check(2, 4)
        with pytest.raises(DomainError):
            identity_check(-1, 4)


class TestSignPoints:
    def test_full(self):
        pts = SignPointSet.full(3)
        assert pts.points == ((1, 1, 1), (1, -1, 1), (1, 1, -1), (1, -1, -1))
        assert len(SignPointSet.full(5)) == 16

    def test_validation(self):
        with pytest.raises(DomainError):
            SignPointSet(2, ((-1, 1),))
        with pytest.raises(DomainError):
            SignPointSet(2, ((1, 1), (1, 1)))
        with pytest.raises(DomainError):
            SignPointSet(2, ((1, 2),))


class TestPowerSpan:
    def test_n2_d2(self):
        A = power_span_matrix(SignPointSet.full(2), 2)
        assert A.rows == ((1, 1), (2, -2), (1, 1))
        assert exact_rank(A) == 2

    def test_all_sixteen_independent(self):
        # all 16 fourth powers are linearly independent (rank 16, not 15)
        import sympy as sp

        A = power_span_matrix(SignPointSet.full(5), 4)
        assert A.shape == (70, 16)
        assert exact_rank(A) == 16 == sp.Matrix(A.rows).rank()

    def test_one_point(self):
        A = power_span_matrix(SignPointSet.full(5).subset([3]), 4)
        assert exact_rank(A) == 1


def projective_weights(dec):
    # weight / scale keyed by the sign point representing each form
    out = {}
    for w, f in dec.summands:
        rep, s = f.projective()
        out[rep.signs] = Fraction(w * s ** dec.d, dec.scale)
    return out


class TestMembership:
    def test_single_power(self):
        F = expand_linear_power([1] * 5, 4)
        rep = span_membership(F, SignPointSet.full(5).subset([0]), 4)
        assert rep.member and rep.coefficients == (1,)
        assert check_certificate(F, rep, 4)

    def test_sigma_4_5_full_set(self):
        F = elementary_symmetric(4, 5)
        pts = SignPointSet.full(5)
        rep = span_membership(F, pts, 4)
        assert rep.member
        want = projective_weights(decompose_even(4, 5))
        assert dict(zip(pts.points, rep.coefficients)) == want
        assert check_certificate(F, rep, 4)

    def test_fifteen_points_fail(self):
        F = elementary_symmetric(4, 5)
        full = SignPointSet.full(5)
        for drop in range(16):
            pts = full.subset([i for i in range(16) if i != drop])
            rep = span_membership(F, pts, 4)
            assert not rep.member
            assert rep.augmented_rank == rep.span_rank + 1 == 16
            assert check_certificate(F, rep, 4)

    def test_odd_degree_sign_absorbed(self):
        F = elementary_symmetric(3, 3)
        rep = span_membership(F, SignPointSet.full(3), 3)
        assert rep.member
        assert dict(zip(SignPointSet.full(3).points, rep.coefficients)) == projective_weights(decompose_odd(3, 3))

    def test_degree_mismatch(self):
        with pytest.raises(DomainError):
            span_membership(elementary_symmetric(3, 5), SignPointSet.full(5), 4)
        with pytest.raises(DomainError):
            span_membership(elementary_symmetric(3, 4), SignPointSet.full(5), 3)

    def test_empty_point_set(self):
        rep = span_membership(elementary_symmetric(2, 3), SignPointSet(3, ()), 2)
        assert not rep.member
        assert check_certificate(elementary_symmetric(2, 3), rep, 2)

    def test_monotone(self):
        # members stay members in every superset
        F = elementary_symmetric(2, 4)
        full = SignPointSet.full(4)
        member_sets = []
        for size in range(1, 9):
            for s in combinations(range(8), size):
                if span_membership(F, full.subset(s), 2).member:
                    member_sets.append(set(s))
        for s in member_sets:
            for extra in range(8):
                assert span_membership(F, full.subset(sorted(s | {extra})), 2).member


class TestSearch:
    def test_proposition(self):
        rep = proposition_search(4, 5, 15)
        assert rep.total_subsets == 16 and rep.members == []
        assert rep.summary == "0 of 16 subsets admit membership"
        assert all(check_certificate(elementary_symmetric(4, 5), m, 4) for _, m in rep.details)

    def test_full(self):
        rep = proposition_search(4, 5, 16)
        assert rep.total_subsets == 1 and rep.members == [tuple(range(16))]

    def test_odd_monomial(self):
        rep = proposition_search(3, 3, 4)
        assert rep.members == [(0, 1, 2, 3)]

    def test_threads_do_not_change_report(self):
        a = proposition_search(4, 5, 15, threads=1)
        b = proposition_search(4, 5, 15, threads=4)
        assert a.members == b.members
        assert [s for s, _ in a.details] == [s for s, _ in b.details]
        assert [m.separator for _, m in a.details] == [m.separator for _, m in b.details]

    def test_colex_order(self):
        assert colex_combinations(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]

    def test_size_out_of_range(self):
        with pytest.raises(DomainError):
            proposition_search(4, 5, 17)

    def test_json_shape(self):
        d = proposition_search(3, 3, 3).to_dict(timing=False)
        assert set(d) >= {"d", "n", "subset_size", "total_subsets", "members", "elapsed_ms"}
        assert d["elapsed_ms"] is None

    def test_custom_form(self):
        F = expand_linear_power([1, 1, 1], 3) + expand_linear_power([1, -1, -1], 3).scale(2)
        assert proposition_search(3, 3, 2, F=F).members == [(0, 3)]
        rep = proposition_search(3, 3, 1, F=SignedLinearForm(3, (2,)).power(3))
        assert rep.members == [(1,)]
