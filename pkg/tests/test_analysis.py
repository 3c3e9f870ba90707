import math

import numpy as np
import pytest

from oneshift import analysis
from oneshift.analysis import (
    Lcg,
    convergence_study,
    detect_outliers,
    hausdorff_distance,
    rho_commutator_direct,
    rho_numeric,
    tsirelson_suite,
)
from oneshift.forms import (
    DenseSymmetricMatrix,
    GeneralPair,
    PairFamily,
    build_sum_truncation,
    paper_example_3x3,
    rotation_block,
)
from oneshift.theory import (
    LimitSet,
    TwoAngleParams,
    constant_angle_limit_set,
    outlier_solve_eq4,
    rho_two_constant_angles,
    theorem_bounds_general,
    two_angle_essential,
)
from oneshift.tridiag import SpectrumSample, tridiag_eigenvalues

RATIONAL_THETA = math.acos(-0.8)


def spectrum(f, n):
    return tridiag_eigenvalues(build_sum_truncation(f, n))


class TestHausdorff:
    def test_identical_points(self):
        a = SpectrumSample(values=np.array([0.0]))
        assert hausdorff_distance(a, a) == 0.0

    def test_point_to_interval(self):
        # directed distances: point->interval clamps to 1, interval->point
        # is attained at the far endpoint, so the metric value is 2
        a = SpectrumSample(values=np.array([0.0]))
        b = LimitSet(intervals=((1.0, 2.0),))
        assert hausdorff_distance(a, b) == 2.0

    def test_directed_max(self):
        a = SpectrumSample(values=np.array([-1.0, 3.0]))
        b = SpectrumSample(values=np.array([0.0]))
        assert hausdorff_distance(a, b) == 3.0

    def test_symmetry(self):
        rng = np.random.default_rng(2)
        a = SpectrumSample(values=np.sort(rng.normal(size=12)))
        b = LimitSet(intervals=((-0.5, 0.5),), points=(2.0,))
        assert hausdorff_distance(a, b) == hausdorff_distance(b, a)

    def test_gap_midpoint_matters(self):
        # the farthest point of [0, 2] from {0, 2} is the midpoint 1
        a = LimitSet(intervals=((0.0, 2.0),))
        b = SpectrumSample(values=np.array([0.0, 2.0]))
        assert hausdorff_distance(a, b) == 1.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            hausdorff_distance(LimitSet(), LimitSet(points=(0.0,)))


class TestDetectOutliers:
    def test_rational_anchor_pair(self):
        f = PairFamily.head_omega(math.pi / 2, RATIONAL_THETA)
        ess = two_angle_essential(TwoAngleParams.from_angles(RATIONAL_THETA, RATIONAL_THETA))
        found = detect_outliers(spectrum(f, 600), ess, 0.05, spectrum(f, 800))
        assert np.allclose(found, [-1.5, 1.5], atol=1e-8)

    def test_no_outliers_above_half_pi(self):
        theta = 2 * math.pi / 3
        f = PairFamily.constant(theta)
        ess = two_angle_essential(TwoAngleParams.from_angles(theta, theta))
        assert detect_outliers(spectrum(f, 600), ess, 0.02, spectrum(f, 800)) == []

    def test_no_outliers_high_angle(self):
        theta = 0.9 * math.pi
        f = PairFamily.constant(theta)
        ess = two_angle_essential(TwoAngleParams.from_angles(theta, theta))
        assert detect_outliers(spectrum(f, 600), ess, 0.02, spectrum(f, 800)) == []

    def test_requires_larger_second_order(self):
        f = PairFamily.constant(1.0)
        s = spectrum(f, 100)
        ess = constant_angle_limit_set(1.0)
        with pytest.raises(ValueError):
            detect_outliers(s, ess, 0.02, s)


class TestRhoNumeric:
    def test_constant_angle_matches_closed_form(self):
        from oneshift.theory import rho_constant_angle

        rep = rho_numeric(PairFamily.constant(math.pi / 6), 600)
        assert abs(rep.rho - rho_constant_angle(math.pi / 6).rho) < 1e-6

    def test_outlier_driven_value(self):
        rep = rho_numeric(PairFamily.head_omega(math.pi / 2, RATIONAL_THETA), 600)
        assert abs(rep.rho - math.sqrt(3.9375)) < 5e-4
        assert abs(abs(rep.lambda0) - 1.5) < 1e-6

    def test_exclusion_is_load_bearing(self):
        f = PairFamily.two_constant(0.3, 2.0)
        special = math.cos(2.0) - math.cos(0.3)
        closed = 2 * abs(math.sin(1.7))
        with_excl = rho_numeric(f, 400, exclusion=special)
        without = rho_numeric(f, 400)
        assert abs(with_excl.rho - closed) < 5e-3
        assert abs(without.rho - closed) > 1e-2

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            rho_numeric(PairFamily.constant(1.0), 7)


class TestRhoCommutatorDirect:
    def test_commuting_pair(self):
        p = GeneralPair(
            a=DenseSymmetricMatrix(np.diag([1.0, -1.0])),
            b=DenseSymmetricMatrix(np.diag([-1.0, 1.0])),
        )
        assert rho_commutator_direct(p) == 0.0

    def test_paper_example(self):
        rho = rho_commutator_direct(paper_example_3x3(0.01))
        assert abs(rho - math.sqrt(0.04 * 3.96)) < 1e-12

    def test_quarter_turn_reaches_two(self):
        p = GeneralPair(
            a=DenseSymmetricMatrix(rotation_block(0.0)),
            b=DenseSymmetricMatrix(rotation_block(math.pi / 2)),
        )
        assert abs(rho_commutator_direct(p) - 2.0) < 1e-12


class TestConvergence:
    def test_monotone_trend(self):
        f = PairFamily.constant(math.pi / 3)
        limit = constant_angle_limit_set(math.pi / 3)
        recs = convergence_study(f, [60, 600], limit)
        assert recs[1].hausdorff_to_limit < recs[0].hausdorff_to_limit

    def test_golden_distance_at_600(self):
        f = PairFamily.constant(2 * math.pi / 3)
        limit = constant_angle_limit_set(2 * math.pi / 3)
        (rec,) = convergence_study(f, [600], limit)
        assert rec.hausdorff_to_limit < 0.02

    def test_exact_match_is_zero(self):
        limit = LimitSet(points=(0.0, 2.0))
        sample = SpectrumSample(values=np.array([0.0, 2.0]))
        assert hausdorff_distance(sample, limit) == 0.0

    def test_rejects_unsorted_orders(self):
        f = PairFamily.constant(1.0)
        with pytest.raises(ValueError):
            convergence_study(f, [600, 60], constant_angle_limit_set(1.0))


class TestTsirelson:
    def test_bound_holds(self):
        best = tsirelson_suite(99, 40)
        assert best <= 2 * math.sqrt(2) + 1e-9

    def test_deterministic(self):
        assert tsirelson_suite(7, 10) == tsirelson_suite(7, 10)

    def test_lcg_range(self):
        rng = Lcg(0)
        vals = [rng.next_float() for _ in range(1000)]
        assert all(0.0 <= v < 1.0 for v in vals)
        angles = [Lcg(1).angle() for _ in range(10)]
        assert all(0.05 <= a <= math.pi - 0.05 for a in angles)

    def test_rejects_no_trials(self):
        with pytest.raises(ValueError):
            tsirelson_suite(1, 0)


class TestBoundsPipelineConsistency:
    def test_s_below_delta_collapses_to_closed_form(self):
        # detected outliers plus the essential band reproduce the closed form
        for om, th in [(2.0, 0.4), (2.6, 0.5)]:
            p = TwoAngleParams.from_angles(om, th)
            assert p.s <= p.delta
            f = PairFamily.two_constant(om, th)
            ess = two_angle_essential(p)
            outliers = detect_outliers(spectrum(f, 400), ess, 0.02, spectrum(f, 600))
            lam = LimitSet(intervals=ess.intervals, points=tuple(outliers))
            rep = theorem_bounds_general(p, lam)
            assert rep.exact
            assert abs(rep.rho - rho_two_constant_angles(om, th).rho) < 5e-3

    def test_refined_outliers_satisfy_residual(self):
        f_om, f_th = math.pi / 2, RATIONAL_THETA
        f = PairFamily.head_omega(f_om, f_th)
        ess = two_angle_essential(TwoAngleParams.from_angles(f_th, f_th))
        detected = detect_outliers(spectrum(f, 600), ess, 0.02, spectrum(f, 800))
        refined = {r.lam for r in outlier_solve_eq4(f_om, f_th)}
        for v in detected:
            assert min(abs(v - r) for r in refined) < 1e-6


class TestLambdaMaxCrossing:
    def test_reference_value(self):
        x3 = analysis.solve_lambda_max_crossing()
        assert abs(x3 - 2.4352) < 1e-3
