import math

import numpy as np
import pytest
import scipy.stats

from phimix import (MixingLaw, StableExponent, SubordinatedSpec, directing_lt,
                    mixture_cf, sample_mixture_id, sample_subordinated_path,
                    subordinated_cf)
from phimix.empirical import (blocked_draw, cf_sup_distance, empirical_cf,
                              ks_distance, two_sample_ks, two_sample_ks_critical)

GAUSS = StableExponent(1.0, 2.0, 0.0)
GRID = np.linspace(-5.0, 5.0, 61)


def test_directing_lt_closed_forms():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(2.0, 1.0), times=(1.0,))
    assert directing_lt(spec, 3.0, 1.0) == pytest.approx(2.0 ** -6.0, rel=1e-14)
    spec = SubordinatedSpec(GAUSS, MixingLaw.degenerate(0.5), times=(1.0,))
    assert directing_lt(spec, 2.0, 3.0) == pytest.approx(math.exp(-3.0), rel=1e-14)
    # time 1 recovers the plain transform
    spec = SubordinatedSpec(GAUSS, MixingLaw.exponential(1.0), times=(1.0,))
    assert directing_lt(spec, 1.0, 1.0) == pytest.approx(0.5, rel=1e-14)


def test_subordinated_cf_closed_forms():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0, 1.0), times=(1.0,))
    assert subordinated_cf(spec, 1.0, 1.0) == pytest.approx(
        mixture_cf(MixingLaw.gamma(1.0, 1.0), GAUSS, 1.0), rel=1e-14)
    # (1 + t^2)^(-nu*time): time 2 at t=1 gives 1/4
    assert subordinated_cf(spec, 2.0, 1.0) == pytest.approx(0.25 + 0.0j, rel=1e-14)
    assert subordinated_cf(spec, 3.7, 0.0) == 1.0 + 0.0j


def test_spec_validation():
    with pytest.raises(ValueError):
        SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=())
    with pytest.raises(ValueError):
        SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(1.0, 0.5))
    with pytest.raises(ValueError):
        SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(-1.0, 1.0))


def test_path_shapes():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.5, 1.0, 2.0))
    rng = np.random.default_rng(0)
    one = sample_subordinated_path(spec, rng)
    assert one.shape == (3,)
    many = sample_subordinated_path(spec, rng, 10)
    assert many.shape == (10, 3)


def test_marginal_cf_at_every_grid_time():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.25, 0.5, 0.75, 1.0))
    n = 100_000
    paths = blocked_draw(81, (6, 1), n, lambda rng, m: sample_subordinated_path(spec, rng, m))
    tol = 3.0 / math.sqrt(n) + 0.005
    for i, t_time in enumerate(spec.times):
        dist = cf_sup_distance(paths[:, i], lambda u: subordinated_cf(spec, t_time, u), GRID)
        assert dist < tol, (t_time, dist)


def test_endpoint_matches_direct_mixture_draws():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.5, 1.0))
    n = 100_000
    paths = blocked_draw(82, (6, 2), n, lambda rng, m: sample_subordinated_path(spec, rng, m))
    direct = blocked_draw(83, (6, 3), n,
                          lambda rng, m: sample_mixture_id(MixingLaw.gamma(1.0), GAUSS, rng, m))
    assert two_sample_ks(paths[:, -1], direct) < two_sample_ks_critical(n, n, level=0.01)


def test_variance_gamma_endpoint_is_laplace():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(1.0,))
    draws = blocked_draw(84, (6, 4), 100_000,
                         lambda rng, m: sample_subordinated_path(spec, rng, m)[:, 0])
    assert ks_distance(draws, scipy.stats.laplace(scale=1.0).cdf) < 0.01


def test_additivity_of_marginals():
    # the law at time 1 equals the convolution of independent marginals
    # at times 0.4 and 0.6
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.4, 1.0))
    n = 100_000
    whole = blocked_draw(207, (6, 5), n, lambda rng, m: sample_subordinated_path(spec, rng, m))[:, 1]
    a = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.4,))
    b = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.6,))
    xa = blocked_draw(208, (6, 6), n, lambda rng, m: sample_subordinated_path(a, rng, m)[:, 0])
    xb = blocked_draw(209, (6, 7), n, lambda rng, m: sample_subordinated_path(b, rng, m)[:, 0])
    dist = np.abs(empirical_cf(whole, GRID) - empirical_cf(xa + xb, GRID)).max()
    assert dist < 0.015


def test_increments_uncorrelated():
    spec = SubordinatedSpec(GAUSS, MixingLaw.gamma(1.0), times=(0.25, 0.5, 0.75, 1.0))
    n = 100_000
    paths = blocked_draw(210, (6, 8), n, lambda rng, m: sample_subordinated_path(spec, rng, m))
    inc = np.diff(np.concatenate([np.zeros((n, 1)), paths], axis=1), axis=1)
    corr = np.corrcoef(inc.T) - np.eye(4)
    assert np.abs(corr).max() < 3.0 / math.sqrt(n)


def test_degenerate_directing_is_pure_stable_motion():
    # operational time c*t: increment over [0,1] has variance 2*lam for the
    # Gaussian base, and the directing increments burn no randomness
    spec = SubordinatedSpec(StableExponent(1.5, 2.0, 0.0), MixingLaw.degenerate(1.0),
                            times=(0.5, 1.0))
    n = 200_000
    paths = blocked_draw(211, (6, 9), n, lambda rng, m: sample_subordinated_path(spec, rng, m))
    assert abs(paths[:, 1].var() - 3.0) < 0.15
    # the same stream without the directing draw stays aligned
    r1 = np.random.default_rng(5)
    r2 = np.random.default_rng(5)
    p1 = sample_subordinated_path(spec, r1, 4)
    p2 = sample_subordinated_path(spec, r2, 4)
    np.testing.assert_array_equal(p1, p2)


def test_unsupported_directing_kind_rejected():
    class Weird:
        kind = "weird"
    with pytest.raises(ValueError):
        SubordinatedSpec(GAUSS, Weird(), times=(1.0,))
