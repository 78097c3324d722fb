import math

import numpy as np
import pytest
import scipy.stats

from phimix import (MixingLaw, StableExponent, linnik_cf, mixture_cf,
                    sample_mixture_id, sample_strictly_stable)
from phimix.empirical import (blocked_draw, cf_sup_distance, ks_distance,
                              psd_toeplitz_check, two_sample_ks,
                              two_sample_ks_critical)


def test_linnik_closed_values():
    assert linnik_cf(1.0, 2.0, 0.0, 1.0, 1.0) == pytest.approx(0.5 + 0.0j, rel=1e-15)
    assert linnik_cf(1.0, 1.0, 0.0, 2.0, 3.0) == pytest.approx(0.0625 + 0.0j, rel=1e-15)
    assert linnik_cf(2.0, 1.3, 0.4, 0.7, 0.0) == 1.0 + 0.0j


def test_mixture_cf_closed_values():
    exp_abs = StableExponent(1.0, 1.0, 0.0)
    assert mixture_cf(MixingLaw.exponential(1.0), exp_abs, 1.0) == pytest.approx(
        0.5 + 0.0j, rel=1e-14)
    assert mixture_cf(MixingLaw.gamma(2.0), exp_abs, 0.0) == 1.0 + 0.0j
    # degenerate mixing returns the base law CF
    gauss = StableExponent(1.0, 2.0, 0.0)
    assert mixture_cf(MixingLaw.degenerate(1.0), gauss, 2.0) == pytest.approx(
        math.exp(-4.0) + 0.0j, rel=1e-14)


def test_gamma_mixture_is_linnik():
    # the mixture closed form and the direct family formula must agree exactly
    t = np.linspace(-10.0, 10.0, 100)
    for lam, alpha, beta, nu in ((1.0, 2.0, 0.0, 1.0), (2.0, 1.0, 0.5, 2.0),
                                 (0.5, 1.5, -0.3, 0.25)):
        mixing = MixingLaw.gamma(nu, 1.0)
        e = StableExponent(lam, alpha, beta)
        got = mixture_cf(mixing, e, t)
        want = linnik_cf(lam, alpha, beta, nu, t)
        np.testing.assert_allclose(got, want, atol=1e-12)


def test_mixture_cf_general_exponent_callable():
    # a bare exponent function is accepted in place of the dataclass
    out = mixture_cf(MixingLaw.exponential(1.0), lambda t: np.abs(t), 1.0)
    assert out == pytest.approx(0.5 + 0.0j, rel=1e-14)


def test_mixture_cf_is_positive_semidefinite():
    t = np.linspace(-5.0, 5.0, 41)
    for mixing, e in ((MixingLaw.gamma(1.0), StableExponent(1.0, 2.0, 0.0)),
                      (MixingLaw.gamma(2.0), StableExponent(1.0, 1.0, 0.0)),
                      (MixingLaw.exponential(1.0), StableExponent(1.0, 0.5, math.pi / 4)),
                      (MixingLaw.degenerate(2.0), StableExponent(1.0, 1.5, 0.0))):
        report = psd_toeplitz_check(lambda u: mixture_cf(mixing, e, u), t)
        assert report.passed, (mixing.kind, report)


def test_sampler_matches_cf():
    grid = np.linspace(-5.0, 5.0, 61)
    n = 100_000
    tol = 3.0 / math.sqrt(n) + 0.005
    cases = ((MixingLaw.gamma(1.0), StableExponent(1.0, 2.0, 0.0)),
             (MixingLaw.gamma(2.0), StableExponent(1.0, 1.0, 0.0)),
             (MixingLaw.exponential(2.0), StableExponent(0.5, 1.5, 0.0)))
    for i, (mixing, e) in enumerate(cases):
        draws = blocked_draw(31, (1, i), n,
                             lambda rng, m: sample_mixture_id(mixing, e, rng, m))
        dist = cf_sup_distance(draws, lambda u: mixture_cf(mixing, e, u), grid)
        assert dist < tol, (mixing.kind, dist)


def test_laplace_special_case():
    # unit gamma mixing of the Gaussian exponent is the standard Laplace law
    draws = blocked_draw(32, (1, 3), 100_000,
                         lambda rng, m: sample_mixture_id(MixingLaw.gamma(1.0), StableExponent(1.0, 2.0, 0.0), rng, m))
    assert ks_distance(draws, scipy.stats.laplace(scale=1.0).cdf) < 0.01


def test_degenerate_mixing_reduces_to_stable():
    # same seed, same stream: the two samplers must agree in distribution
    e = StableExponent(1.0, 1.5, 0.0)
    a = blocked_draw(33, (1, 4), 50_000,
                     lambda rng, m: sample_mixture_id(MixingLaw.degenerate(1.0), e, rng, m))
    b = blocked_draw(34, (1, 5), 50_000,
                     lambda rng, m: sample_strictly_stable(e, rng, m))
    assert two_sample_ks(a, b) < two_sample_ks_critical(50_000, 50_000)


def test_symmetric_mixture_median_near_zero():
    draws = blocked_draw(35, (1, 6), 100_000,
                         lambda rng, m: sample_mixture_id(MixingLaw.gamma(2.0), StableExponent(1.0, 1.5, 0.0), rng, m))
    assert abs(np.median(draws)) < 0.02


def test_cf_error_decays_like_root_n():
    mixing = MixingLaw.gamma(1.0)
    e = StableExponent(1.0, 2.0, 0.0)
    grid = np.linspace(-5.0, 5.0, 61)
    dists = []
    for n in (1_000, 10_000, 100_000):
        draws = blocked_draw(36, (1, 7), n,
                             lambda rng, m: sample_mixture_id(mixing, e, rng, m))
        dists.append(cf_sup_distance(draws, lambda u: linnik_cf(1.0, 2.0, 0.0, 1.0, u), grid))
    assert dists[0] > dists[1] > dists[2]
    assert dists[2] < 3.0 / math.sqrt(100_000) + 0.005
