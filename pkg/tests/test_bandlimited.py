"""Trigonometric polynomials, norms, spectra, and derivative ratios."""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thickset import (
    BandSpec,
    DuplicateFrequencyError,
    EmptyBandError,
    IntervalSet,
    InvalidExponentError,
    NormQuery,
    TrigPoly,
    ZeroFunctionError,
    bernstein_ratio,
    full_torus,
    lattice_indices,
    lp_norm,
    random_bandlimited,
)

TWO_PI = 2.0 * math.pi


class TestTrigPoly:
    def test_eval_single_mode(self):
        f = TrigPoly.from_terms(TWO_PI, [(1, 1.0 + 0.0j)])
        x = 0.25
        expected = np.exp(1j * x)
        assert abs(f.eval(x) - expected) < 1e-14

    def test_duplicate_mode_rejected(self):
        with pytest.raises(DuplicateFrequencyError):
            TrigPoly.from_terms(1.0, [(0, 1.0), (0, 2.0)])

    def test_derivative_multiplies_by_frequency(self):
        f = TrigPoly.from_terms(TWO_PI, [(3, 2.0 - 1.0j)])
        g = f.derivative()
        x = 0.7
        assert abs(g.eval(x) - 3j * f.eval(x)) < 1e-13

    def test_addition_merges_modes(self):
        f = TrigPoly.from_terms(1.0, [(0, 1.0), (1, 2.0)])
        g = TrigPoly.from_terms(1.0, [(1, -2.0), (2, 5.0)])
        h = f + g
        assert abs(h.eval(0.3) - (f.eval(0.3) + g.eval(0.3))) < 1e-13

    def test_scalar_multiplication(self):
        f = TrigPoly.from_terms(1.0, [(1, 1.0 + 1.0j)])
        assert abs((2.0 * f).eval(0.1) - 2.0 * f.eval(0.1)) < 1e-14

    def test_json_round_trip(self):
        f = TrigPoly.from_terms(8.0, [(-2, 1.0 + 2.0j), (5, -0.5j)])
        g = TrigPoly.from_json(f.to_json())
        assert g.period == f.period
        assert np.array_equal(g.ms, f.ms)
        assert np.allclose(g.coeffs, f.coeffs)

    def test_max_frequency_ignores_dead_modes(self):
        f = TrigPoly.from_terms(TWO_PI, [(1, 1.0), (7, 0.0)])
        assert math.isclose(f.max_frequency, 1.0, rel_tol=1e-15)


class TestLpNorm:
    def test_unimodular_on_set(self):
        # |f| = 1 for a single unit-coefficient mode, so the
        # Lp norm over E is |E|^(1/p).
        f = TrigPoly.from_terms(1.0, [(3, 1.0)])
        E = IntervalSet(((0.0, 0.1), (0.5, 0.7)))
        got = lp_norm(f, NormQuery(2.0, E))
        assert math.isclose(got, math.sqrt(0.3), rel_tol=1e-12)

    def test_parseval_two_sqrt_pi(self):
        # ||f||_2^2 = L * sum |c|^2 on the full torus:
        # L = 2 pi, coefficients (1, 1) -> norm = sqrt(4 pi) = 2 sqrt(pi).
        f = TrigPoly.from_terms(TWO_PI, [(0, 1.0), (1, 1.0)])
        got = lp_norm(f, NormQuery(2.0, full_torus(TWO_PI)))
        assert math.isclose(got, 2.0 * math.sqrt(math.pi), rel_tol=1e-12)

    def test_parseval_random(self):
        rng = np.random.default_rng(11)
        L = 8.0
        terms = [(m, complex(rng.standard_normal(), rng.standard_normal())) for m in range(-6, 7)]
        f = TrigPoly.from_terms(L, terms)
        exact = math.sqrt(L * sum(abs(c) ** 2 for _, c in terms))
        got = lp_norm(f, NormQuery(2.0, full_torus(L)))
        assert math.isclose(got, exact, rel_tol=1e-11)

    def test_additivity_over_disjoint_pieces(self):
        f = random_bandlimited(BandSpec((0.0,), 4.0 * math.pi), 8.0, seed=5)
        p = 2.0
        whole = lp_norm(f, NormQuery(p, IntervalSet(((0.0, 3.0),)))) ** p
        left = lp_norm(f, NormQuery(p, IntervalSet(((0.0, 1.2),)))) ** p
        right = lp_norm(f, NormQuery(p, IntervalSet(((1.2, 3.0),)))) ** p
        assert math.isclose(whole, left + right, rel_tol=1e-9)

    def test_monotone_in_set(self):
        f = random_bandlimited(BandSpec((0.0,), 4.0 * math.pi), 8.0, seed=6)
        small = lp_norm(f, NormQuery(1.0, IntervalSet(((0.5, 1.0),))))
        large = lp_norm(f, NormQuery(1.0, IntervalSet(((0.0, 2.0),))))
        assert small <= large * (1.0 + 1e-12)

    def test_sup_norm_constant(self):
        f = TrigPoly.from_terms(1.0, [(0, 3.0 - 4.0j)])
        got = lp_norm(f, NormQuery(math.inf, full_torus(1.0)))
        assert math.isclose(got, 5.0, rel_tol=1e-12)

    def test_sup_norm_cosine(self):
        # f = 2 cos(x) on [0, 2 pi] peaks at 2
        f = TrigPoly.from_terms(TWO_PI, [(1, 1.0), (-1, 1.0)])
        got = lp_norm(f, NormQuery(math.inf, full_torus(TWO_PI)))
        assert math.isclose(got, 2.0, rel_tol=1e-10)

    def test_invalid_exponent(self):
        f = TrigPoly.from_terms(1.0, [(0, 1.0)])
        with pytest.raises(InvalidExponentError):
            NormQuery(0.5, full_torus(1.0))

    def test_degenerate_interval_rejected_at_construction(self):
        from thickset import InvalidIntervalError

        with pytest.raises(InvalidIntervalError):
            IntervalSet(((0.0, 0.0),))


class TestLatticeAndRandom:
    def test_lattice_indices_single_band(self):
        # L = 2 pi -> frequencies are the integers; band [-2, 2]
        ms = lattice_indices(BandSpec((0.0,), 4.0), TWO_PI)
        assert ms.tolist() == [-2, -1, 0, 1, 2]

    def test_lattice_indices_offset_band(self):
        ms = lattice_indices(BandSpec((10.0,), 2.0), TWO_PI)
        assert ms.tolist() == [9, 10, 11]

    def test_empty_band_raises(self):
        with pytest.raises(EmptyBandError):
            lattice_indices(BandSpec((0.5,), 0.25), TWO_PI)

    def test_random_bandlimited_spectrum_inside_band(self):
        b = 4.0 * math.pi
        f = random_bandlimited(BandSpec((0.0,), b), 8.0, seed=9)
        assert f.max_frequency <= b / 2.0 + 1e-9

    def test_random_bandlimited_deterministic(self):
        a = random_bandlimited(BandSpec((0.0,), 10.0), 8.0, seed=42)
        b = random_bandlimited(BandSpec((0.0,), 10.0), 8.0, seed=42)
        assert np.array_equal(a.coeffs, b.coeffs)
        c = random_bandlimited(BandSpec((0.0,), 10.0), 8.0, seed=43)
        assert not np.array_equal(a.coeffs, c.coeffs)

    def test_budget_subsets_modes(self):
        f = random_bandlimited(BandSpec((0.0,), 40.0), 8.0, budget=5, seed=1)
        assert len(f.ms) == 5


class TestBernstein:
    @pytest.mark.parametrize("p", [1.0, 2.0, 4.0, math.inf])
    def test_ratio_bounded_by_max_frequency(self, p):
        f = random_bandlimited(BandSpec((0.0,), 6.0 * math.pi), 8.0, seed=int(p if p != math.inf else 99))
        nu_max = f.max_frequency
        assert bernstein_ratio(f, p) <= nu_max * (1.0 + 1e-9) + 1e-12

    def test_pure_mode_attains_frequency(self):
        f = TrigPoly.from_terms(TWO_PI, [(4, 1.0)])
        assert math.isclose(bernstein_ratio(f, 2.0), 4.0, rel_tol=1e-10)

    def test_zero_function_rejected(self):
        f = TrigPoly.from_terms(1.0, [(0, 0.0)])
        with pytest.raises(ZeroFunctionError):
            bernstein_ratio(f, 2.0)


@settings(max_examples=30, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    p=st.sampled_from([1.0, 1.5, 2.0, 3.0]),
)
def test_restriction_never_exceeds_full_norm(seed, p):
    f = random_bandlimited(BandSpec((0.0,), 4.0 * math.pi), 8.0, seed=seed)
    full = lp_norm(f, NormQuery(p, full_torus(8.0)))
    part = lp_norm(f, NormQuery(p, IntervalSet(((1.0, 2.5),))))
    assert part <= full * (1.0 + 1e-9)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_quadrature_matches_parseval(seed):
    rng = np.random.default_rng(seed)
    L = 4.0
    terms = [(m, complex(rng.standard_normal(), rng.standard_normal())) for m in (-3, -1, 0, 2)]
    f = TrigPoly.from_terms(L, terms)
    exact = math.sqrt(L * sum(abs(c) ** 2 for _, c in terms))
    got = lp_norm(f, NormQuery(2.0, full_torus(L)))
    assert math.isclose(got, exact, rel_tol=1e-10)
