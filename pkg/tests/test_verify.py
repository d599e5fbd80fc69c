from fractions import Fraction

import pytest

import legscale.verify
from legscale import (
    FORM_DERIVATIVE,
    FORM_LEGENDRE,
    DEFAULT_LAMBDAS,
    NONZERO_LAMBDAS,
    ScalingExpansion,
    VerificationReport,
    expand_derivative_form,
    legendre_bonnet,
    random_lambdas,
    replay_rodrigues_derivation,
    scale_argument,
    verify_derivative_identity,
    verify_recurrence_vs_telescoping,
    verify_replay,
    verify_scaling_identity,
    verify_surplus_rows,
)


class TestSweepsPass:
    def test_scaling_identity_single_lambda(self):
        report = verify_scaling_identity(10, (Fraction(2),), FORM_LEGENDRE)
        assert report.passed
        assert report.status == "pass"
        assert report.counterexample is None

    def test_scaling_identity_trivial_lambdas(self):
        for lam in (1, -1):
            for form in (FORM_DERIVATIVE, FORM_LEGENDRE):
                assert verify_scaling_identity(10, (lam,), form).passed

    def test_scaling_identity_default_sweep(self):
        assert verify_scaling_identity(12, DEFAULT_LAMBDAS, FORM_DERIVATIVE).passed
        report = verify_scaling_identity(12, DEFAULT_LAMBDAS, FORM_LEGENDRE)
        assert report.passed
        assert report.details["limit_variants_agree"] is True

    def test_derivative_identity(self):
        assert verify_derivative_identity(12).passed

    def test_surplus_rows(self):
        assert verify_surplus_rows(10).passed

    def test_recurrence_vs_telescoping(self):
        assert verify_recurrence_vs_telescoping(12).passed

    def test_replay(self):
        assert verify_replay(10, NONZERO_LAMBDAS).passed

    def test_empty_lambda_set_rejected(self):
        with pytest.raises(ValueError):
            verify_scaling_identity(5, ())


class TestReplay:
    def test_examples(self):
        assert replay_rodrigues_derivation(2, 3) == scale_argument(legendre_bonnet(3), 2)
        for n in range(8):
            assert replay_rodrigues_derivation(1, n) == legendre_bonnet(n)
        lam = Fraction(1, 2)
        assert replay_rodrigues_derivation(lam, 4) == scale_argument(legendre_bonnet(4), lam)

    def test_zero_lambda_rejected(self):
        with pytest.raises(ValueError):
            replay_rodrigues_derivation(0, 3)
        with pytest.raises(ValueError):
            verify_replay(5, (Fraction(1), Fraction(0)))


class TestReportMachinery:
    def test_status_consistency_enforced(self):
        with pytest.raises(ValueError):
            VerificationReport(
                subject="x",
                n_range=(0, 1),
                k_range=None,
                lambdas=None,
                passed=False,
                counterexample=None,
            )

    def test_json_shape(self):
        report = verify_scaling_identity(4, (Fraction(1, 2),), FORM_LEGENDRE)
        data = report.to_json()
        assert data["subject"] == "eq13"
        assert data["status"] == "pass"
        assert data["n_range"] == [0, 4]
        assert data["lambdas"] == ["1/2"]
        assert data["counterexample"] is None
        assert data["details"] == {"limit_variants_agree": True}

    def test_counterexample_records_first_failure(self, monkeypatch):
        real = expand_derivative_form

        def corrupted(lam, n):
            expansion = real(lam, n)
            if n in (3, 5):
                coeffs = (expansion.coeffs[0] + 1,) + expansion.coeffs[1:]
                return ScalingExpansion(expansion.lam, n, expansion.form, coeffs)
            return expansion

        monkeypatch.setattr(legscale.verify, "expand_derivative_form", corrupted)
        report = verify_scaling_identity(8, (Fraction(2),), FORM_DERIVATIVE)
        assert not report.passed
        assert report.status == "fail"
        example = report.counterexample
        assert example is not None
        assert example.params["n"] == 3  # lowest failing case wins
        assert example.params["lambda"] == "2"
        assert len(example.lhs) == len(example.rhs) > 0
        assert example.lhs != example.rhs

    def test_counterexample_json(self, monkeypatch):
        real = expand_derivative_form

        def corrupted(lam, n):
            expansion = real(lam, n)
            if n == 2:
                coeffs = (expansion.coeffs[0] + 1,) + expansion.coeffs[1:]
                return ScalingExpansion(expansion.lam, n, expansion.form, coeffs)
            return expansion

        monkeypatch.setattr(legscale.verify, "expand_derivative_form", corrupted)
        report = verify_scaling_identity(4, (Fraction(1, 2),), FORM_DERIVATIVE)
        data = report.to_json()
        assert data["status"] == "fail"
        assert data["counterexample"]["params"]["n"] == 2
        assert isinstance(data["counterexample"]["lhs"], list)


class TestRandomLambdas:
    def test_reproducible(self):
        assert random_lambdas(20, 7) == random_lambdas(20, 7)
        assert random_lambdas(20, 7) != random_lambdas(20, 8)

    def test_bounds(self):
        for value in random_lambdas(200, 13):
            assert abs(value.numerator) <= 9
            assert 1 <= value.denominator <= 9
