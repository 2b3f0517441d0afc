"""The sinc-power family that pins the exponent's linear shape."""
import math

import numpy as np
import pytest

from thickset import (
    BandTooSmallError,
    InsufficientDataError,
    InvalidExponentError,
    NonIntegrableError,
    default_truncation,
    exponent_fit,
    extremal_pair,
    extremal_ratio,
    spectral_mass_outside_band,
    theorem1_bound_log10,
)

FOUR_PI = 4.0 * math.pi


class TestExtremalPair:
    def test_minimal_bandwidth(self):
        inst = extremal_pair(FOUR_PI, 0.3)
        assert inst.power == 1

    def test_power_floors(self):
        assert extremal_pair(10.0 * FOUR_PI, 0.3).power == 10
        assert extremal_pair(10.5 * FOUR_PI, 0.3).power == 10

    def test_band_too_small(self):
        with pytest.raises(BandTooSmallError):
            extremal_pair(FOUR_PI - 0.1, 0.3)

    def test_peak_value(self):
        # removable singularity: the unnormalized kernel peaks at (2 pi)^m
        inst = extremal_pair(2.0 * FOUR_PI, 0.3)
        got = inst.eval(0.0, normalized=False)
        assert math.isclose(got, (2.0 * math.pi) ** 2, rel_tol=1e-12)

    def test_series_matches_direct_near_zero(self):
        inst = extremal_pair(FOUR_PI, 0.3)
        # just outside the series cutoff the direct formula applies; just
        # inside, the Taylor series: both agree to near machine precision
        for x in (9e-5, 1.1e-4):
            direct = math.sin(2.0 * math.pi * x) / (2.0 * math.pi * x)
            assert math.isclose(inst.eval(x), direct, rel_tol=1e-10)

    def test_zeros_at_half_integers(self):
        inst = extremal_pair(FOUR_PI, 0.3)
        assert abs(inst.eval(0.5)) < 1e-15
        assert abs(inst.eval(1.0)) < 1e-15
        assert abs(inst.eval(2.5)) < 1e-15

    def test_sliver_set_avoids_peak(self):
        # the test set hugs the half-integers, leaving the peak at 0 out
        inst = extremal_pair(FOUR_PI, 0.2)
        pieces = inst.set.materialize(-1.0, 1.0)
        for lo, hi in pieces:
            assert not (lo <= 0.0 <= hi)


class TestSpectralSupport:
    def test_mass_outside_band_tiny(self):
        inst = extremal_pair(10.0 * FOUR_PI, 0.3)
        assert spectral_mass_outside_band(inst) <= 1e-6


class TestExtremalRatio:
    def test_non_integrable(self):
        inst = extremal_pair(FOUR_PI, 0.3)  # m = 1
        with pytest.raises(NonIntegrableError):
            extremal_ratio(inst, 1.0)  # m p = 1 diverges

    def test_sup_rejected(self):
        inst = extremal_pair(2.0 * FOUR_PI, 0.3)
        with pytest.raises(InvalidExponentError):
            extremal_ratio(inst, math.inf)

    def test_ratio_in_unit_interval(self):
        inst = extremal_pair(2.0 * FOUR_PI, 0.3)
        r = extremal_ratio(inst, 2.0)
        assert 0.0 < r < 1.0

    def test_monotone_in_bandwidth(self):
        rs = [
            extremal_ratio(extremal_pair(k * FOUR_PI, 0.3), 2.0)
            for k in (2, 4, 8)
        ]
        assert all(a > b for a, b in zip(rs, rs[1:]))

    def test_above_closed_form_bound(self):
        for k in (2, 5, 10):
            for gamma in (0.1, 0.4):
                inst = extremal_pair(k * FOUR_PI, gamma)
                r = extremal_ratio(inst, 2.0)
                assert math.log10(r) >= theorem1_bound_log10(gamma, k * FOUR_PI, 2.0)

    def test_truncation_override(self):
        inst = extremal_pair(4.0 * FOUR_PI, 0.3)
        a = extremal_ratio(inst, 2.0)
        b = extremal_ratio(inst, 2.0, truncation=2.0 * default_truncation(inst, 2.0))
        assert math.isclose(a, b, rel_tol=1e-6)

    def test_default_truncation_positive(self):
        inst = extremal_pair(2.0 * FOUR_PI, 0.3)
        assert default_truncation(inst, 2.0) >= 4.0


class TestExponentFit:
    def test_slope_tracks_power(self):
        bw = [10.0 * FOUR_PI, 20.0 * FOUR_PI, 40.0 * FOUR_PI]
        gammas = [0.1, 0.2, 0.4]
        fit = exponent_fit(bw, gammas, 2.0)
        # per-bandwidth slope of log ratio against log gamma grows like
        # m + 1/p; with m = 10, 20, 40 expect roughly 10.5, 21, 42
        assert 8.0 <= fit.slopes[0] <= 14.0
        assert 17.0 <= fit.slopes[1] <= 26.0
        assert 34.0 <= fit.slopes[2] <= 52.0
        assert fit.r_squared >= 0.9
        # slope of the slopes against bandwidth stays near 1/(4 pi)
        assert fit.slope_of_slopes == pytest.approx(fit.example_rate, rel=4.0)

    def test_needs_three_gammas(self):
        with pytest.raises(InsufficientDataError):
            exponent_fit([10.0 * FOUR_PI, 20.0 * FOUR_PI, 40.0 * FOUR_PI], [0.1, 0.2], 2.0)

    def test_needs_three_bandwidths(self):
        with pytest.raises(InsufficientDataError):
            exponent_fit([10.0 * FOUR_PI], [0.1, 0.2, 0.4], 2.0)
