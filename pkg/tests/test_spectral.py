"""Unit tests for eigen verification, involution, and exact powers."""
import math

import pytest

from rjpascal.pascal import IntMatrix, RingMatrix, build_r, build_rx, build_u, build_w
from rjpascal.ring import A, ONE, IntPoly, RingElem, X
from rjpascal.spectral import (
    default_tolerance,
    eigen_distinctness,
    eigen_pair,
    eigenbasis_det_numeric,
    eigenvalue,
    eigenvalue_power,
    eigenvalues_numeric,
    involution_scale,
    matrix_power_closed_form,
    matrix_power_oracle,
    verify_diagonalization_numeric,
    verify_eigenpair,
    verify_involution,
)

ONE_AT_1 = IntPoly.const(1)


class TestEigenvalue:
    def test_n1(self):
        assert eigenvalue(1, 1) == ONE

    def test_n2_values_at_one(self):
        assert eigenvalue(2, 1).specialize(1) == RingElem(1, -1, ONE_AT_1)  # 1 - a
        assert eigenvalue(2, 2).specialize(1) == RingElem(0, 1, ONE_AT_1)  # a

    def test_n2_satisfy_characteristic_polynomial(self):
        # char poly of [[0,1],[1,x]] is t^2 - x*t - 1
        for j in (1, 2):
            lam = eigenvalue(2, j)
            assert lam * lam == lam * X + ONE

    def test_n3_trace(self):
        total = eigenvalue(3, 1) + eigenvalue(3, 2) + eigenvalue(3, 3)
        assert total.specialize(1).as_int() == 2
        assert build_r(3).trace() == 2

    def test_index_validation(self):
        with pytest.raises(IndexError):
            eigenvalue(3, 0)
        with pytest.raises(IndexError):
            eigenvalue(3, 4)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_trace_consistency(self, n):
        total = eigenvalue(n, 1)
        for j in range(2, n + 1):
            total = total + eigenvalue(n, j)
        assert total.specialize(1).as_int() == build_r(n).trace()


class TestEigenvaluePower:
    def test_matches_repeated_multiplication(self):
        for n in range(1, 6):
            for j in range(1, n + 1):
                for m in range(0, 5):
                    assert eigenvalue_power(n, j, m) == eigenvalue(n, j) ** m

    def test_negative_powers_invert(self):
        for n in range(1, 6):
            for j in range(1, n + 1):
                for m in (1, 2, 3):
                    prod = eigenvalue_power(n, j, -m) * eigenvalue(n, j) ** m
                    assert prod == ONE


class TestEigenPair:
    def test_components(self):
        pair = eigen_pair(3, 2)
        assert pair.index == 2
        assert pair.value == eigenvalue(3, 2)
        assert pair.vector == build_u(3).column(2)

    def test_pair_satisfies_eigen_equation(self):
        for n in range(1, 6):
            for j in range(1, n + 1):
                pair = eigen_pair(n, j)
                lhs = build_rx(n).mul_vector(pair.vector)
                assert lhs == tuple(pair.value * e for e in pair.vector)


class TestVerifyEigenpair:
    def test_n1(self):
        assert verify_eigenpair(1, 1)
        assert verify_eigenpair(1, 1, x=None)

    def test_n2_hand_computation(self):
        # R (1, 1-a) = (1-a, 2-a) = (1-a) * (1, 1-a) at x = 1
        r = build_rx(2).specialize(1)
        col = build_u(2).specialize(1).column(1)
        lhs = r.mul_vector(col)
        assert lhs == (RingElem(1, -1, ONE_AT_1), RingElem(2, -1, ONE_AT_1))
        assert verify_eigenpair(2, 1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_all_pairs_at_one(self, n):
        assert all(verify_eigenpair(n, p, x=1) for p in range(1, n + 1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_pairs_symbolic(self, n):
        assert all(verify_eigenpair(n, p, x=None) for p in range(1, n + 1))

    def test_other_specializations(self):
        assert verify_eigenpair(4, 2, x=3)
        assert verify_eigenpair(4, 2, x=0)
        assert verify_eigenpair(4, 2, x=-2)

    def test_index_validation(self):
        with pytest.raises(IndexError):
            verify_eigenpair(3, 4)


class TestVerifyInvolution:
    def test_n1(self):
        # [-1]^2 = I = (1 + a^2)^0 I
        assert involution_scale(1) == ONE
        assert verify_involution(1)
        assert verify_involution(1, x=None)

    def test_n2_symbolic_hand_check(self):
        w = build_w(2)
        assert w @ w == RingMatrix.identity(2).scalar_mul(ONE + A * A)
        assert verify_involution(2, x=None)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_exact_at_one(self, n):
        assert verify_involution(n, x=1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_exact_symbolic(self, n):
        assert verify_involution(n, x=None)

    def test_other_specializations(self):
        assert verify_involution(4, x=2)
        assert verify_involution(4, x=0)


class TestMatrixPower:
    def test_square(self):
        result = matrix_power_closed_form(2, 2)
        assert result.matrix == IntMatrix([[1, 1], [1, 2]])
        assert result.matrix == build_r(2) @ build_r(2)
        assert result.n == 2 and result.exponent == 2

    def test_zeroth_power(self):
        assert matrix_power_closed_form(2, 0).matrix == IntMatrix.identity(2)
        assert matrix_power_closed_form(5, 0).matrix == IntMatrix.identity(5)

    def test_inverse(self):
        result = matrix_power_closed_form(2, -1)
        assert result.matrix == IntMatrix([[-1, 1], [1, 0]])
        assert result.matrix @ build_r(2) == IntMatrix.identity(2)

    def test_n3_squared(self):
        # frozen from the integer oracle (direct multiplication)
        expected = IntMatrix([[1, 2, 1], [1, 3, 2], [1, 4, 4]])
        assert build_r(3) @ build_r(3) == expected
        assert matrix_power_closed_form(3, 2).matrix == expected

    def test_oracle_first_power(self):
        assert matrix_power_oracle(3, 1) == build_r(3)
        assert matrix_power_oracle(1, 7) == IntMatrix([[1]])

    @pytest.mark.parametrize("n", range(1, 7))
    def test_oracle_equivalence(self, n):
        for m in range(-2, 5):
            assert matrix_power_closed_form(n, m).matrix == matrix_power_oracle(n, m)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_inverse_consistency(self, n):
        inv = matrix_power_closed_form(n, -1).matrix
        assert inv @ build_r(n) == IntMatrix.identity(n)

    def test_raw_entries_divisible(self):
        result = matrix_power_closed_form(4, 3)
        scale = involution_scale(4).specialize(1)
        for i in range(1, 5):
            for j in range(1, 5):
                q = result.raw.entry(i, j).divide_exact(scale)
                assert q.as_int() == result.matrix.entry(i, j)


class TestNumericChecks:
    def test_default_tolerance(self):
        assert default_tolerance(8) == 1e-9
        assert default_tolerance(9) == 1e-8

    def test_diag_n2(self):
        rep = verify_diagonalization_numeric(2, 1.0, 1e-9)
        assert rep.passed
        assert rep.residual_involution < 1e-9
        assert rep.residual_diagonalization < 1e-9

    def test_diag_n1_exact(self):
        rep = verify_diagonalization_numeric(1, 1.0)
        assert rep.residual_involution <= 1e-15
        assert rep.residual_diagonalization <= 1e-15

    def test_diag_n10(self):
        assert verify_diagonalization_numeric(10, 1.0, 1e-8).passed

    def test_diag_other_x(self):
        assert verify_diagonalization_numeric(6, 2.0, 1e-8).passed
        assert verify_diagonalization_numeric(6, -1.0, 1e-8).passed

    def test_diag_report_json(self):
        obj = verify_diagonalization_numeric(3, 1.0).to_json()
        assert obj["n"] == 3
        assert obj["pass"] is True
        assert set(obj) == {
            "n", "x", "tol", "residual_involution", "residual_diagonalization", "pass",
        }

    def test_distinctness_n2(self):
        # |a - (1 - a)| = sqrt(5)
        assert eigen_distinctness(2, 1.0) == pytest.approx(math.sqrt(5), abs=1e-9)

    def test_distinctness_n1(self):
        assert eigen_distinctness(1, 1.0) == math.inf

    def test_distinctness_n8(self):
        assert eigen_distinctness(8, 1.0) > 0

    def test_eigenvalues_numeric_match_exact(self):
        for n in range(1, 9):
            nums = eigenvalues_numeric(n, 1.0)
            for j in range(1, n + 1):
                want = eigenvalue(n, j).eval_numeric(1.0)
                assert nums[j - 1] == pytest.approx(want, rel=1e-12)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_eigenbasis_independent(self, n):
        assert abs(eigenbasis_det_numeric(n, 1.0)) > 1e-6


def test_w_symmetry_report():
    """Empirical report only: symmetry of W holds at n = 1, 2 and fails
    from n = 3 on; no contract asserts either way."""
    for n in range(1, 9):
        w = build_w(n)
        sym = all(
            w.entry(i, j) == w.entry(j, i)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        )
        print(f"W symmetric at n={n}: {sym}")
