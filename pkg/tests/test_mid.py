import math

import numpy as np
import pytest

from phimix import (MidLaw, MixingLaw, mid_df_eval, mid_power_check,
                    mid_power_sample, mixture_mid_df,
                    sample_extremal_at_random_time, support_rectangle_check)
from phimix.empirical import blocked_draw, empirical_df
from phimix.fixtures import lshaped_df, nqd_lattice_df

FRECHET = MidLaw("product-frechet", (1.0, 1.0))
LOG_AXIS = np.logspace(math.log10(0.5), math.log10(8.0), 7)
FIXTURE_AXES = [np.array([-0.5, 0.0, 0.5, 1.0, 1.5])] * 2


def test_df_closed_values():
    assert mid_df_eval(FRECHET, np.array([1.0, 1.0])) == pytest.approx(
        math.exp(-2.0), rel=1e-14)
    assert mid_df_eval(FRECHET, np.array([-1.0, 3.0])) == 0.0
    assert mid_df_eval(FRECHET, np.array([0.0, 3.0])) == 0.0
    assert mid_df_eval(FRECHET, np.array([1e9, 1e9])) == pytest.approx(1.0, abs=1e-8)
    shifted = MidLaw("product-frechet", (2.0, 0.5), corners=(1.0, -1.0))
    assert mid_df_eval(shifted, np.array([2.0, 0.0])) == pytest.approx(
        math.exp(-1.0 - 1.0), rel=1e-14)
    expo = MidLaw("product-exponential", (1.0, 1.0))
    assert mid_df_eval(expo, np.array([-1.0, -2.0])) == pytest.approx(
        math.exp(-3.0), rel=1e-14)
    assert mid_df_eval(expo, np.array([5.0, 0.0])) == 1.0


def test_df_vectorized_points():
    pts = np.array([[1.0, 1.0], [2.0, 2.0], [-1.0, 1.0]])
    want = [math.exp(-2.0), math.exp(-1.0), 0.0]
    np.testing.assert_allclose(mid_df_eval(FRECHET, pts), want, rtol=1e-14)


def test_law_validation():
    with pytest.raises(ValueError):
        MidLaw("product-frechet", (1.0,))  # needs dimension >= 2
    with pytest.raises(ValueError):
        MidLaw("product-frechet", (1.0, -1.0))
    with pytest.raises(ValueError):
        MidLaw("logistic", (1.0, 1.0))
    assert MidLaw("product-frechet", (1.0, 2.0, 3.0)).dimension == 3


def test_power_sample_matches_powered_df():
    # a draw from H^t: empirical d.f vs the analytic power on a small grid
    n = 100_000
    t = 2.5
    draws = blocked_draw(71, (9, 1), n,
                         lambda rng, m: mid_power_sample(FRECHET, t, rng, m))
    pts = np.stack(np.meshgrid(LOG_AXIS, LOG_AXIS, indexing="ij"), axis=-1).reshape(-1, 2)
    emp = empirical_df(draws, pts)
    want = mid_df_eval(FRECHET, pts) ** t
    assert np.abs(emp - want).max() < 3.0 / math.sqrt(n) + 0.005
    with pytest.raises(ValueError):
        mid_power_sample(FRECHET, 0.0, np.random.default_rng(0))


def test_power_check_passes_product_frechet():
    for law in (FRECHET, MidLaw("product-frechet", (2.0, 0.5))):
        report = mid_power_check(law, [LOG_AXIS, LOG_AXIS])
        assert report.passed and not report.violations
        assert report.powers == (0.5, 1.0, 2.0, 5.0)


def test_power_check_single_power_reduces_to_df_check():
    report = mid_power_check(FRECHET, [LOG_AXIS, LOG_AXIS], powers=(1.0,))
    assert report.passed


def test_power_check_locates_lshaped_violation():
    # two atoms at (0,1) and (1,0): the (0,0)-(1,1) cell mass of H^s is
    # 1 - 2*(1/2)^s, negative for s < 1
    report = mid_power_check(lshaped_df, FIXTURE_AXES)
    assert not report.passed
    rect = [v for v in report.violations if v.check == "rectangle" and v.power == 0.5]
    assert rect
    worst = min(rect, key=lambda v: v.value)
    assert worst.value == pytest.approx(1.0 - 2.0 * 0.5 ** 0.5, abs=1e-12)
    assert worst.point == (1.0, 1.0)


def test_power_check_locates_nqd_violation():
    # lattice law with negative-quadrant-dependent corners: fractional powers
    # produce a negative cell mass 1 - 2*(1/2)^s + (1/10)^s
    report = mid_power_check(nqd_lattice_df, FIXTURE_AXES)
    assert not report.passed
    rect = [v for v in report.violations if v.check == "rectangle" and v.power == 0.5]
    assert rect
    worst = min(rect, key=lambda v: v.value)
    assert worst.value == pytest.approx(1.0 - 2.0 * 0.5 ** 0.5 + 0.1 ** 0.5, abs=1e-12)
    # the law itself (power 1) is a genuine d.f
    assert mid_power_check(nqd_lattice_df, FIXTURE_AXES, powers=(1.0,)).passed


def test_support_check():
    assert support_rectangle_check(FRECHET, [LOG_AXIS, LOG_AXIS]).passed
    report = support_rectangle_check(lshaped_df, FIXTURE_AXES)
    assert not report.passed
    assert (0.0, 0.0) in report.violations
    # the lattice fixture has rectangular support: necessity, not sufficiency
    assert support_rectangle_check(nqd_lattice_df, FIXTURE_AXES).passed
    # one-point grid passes vacuously
    assert support_rectangle_check(FRECHET, [np.array([1.0]), np.array([1.0])]).passed


def test_mixture_df_values():
    x = np.array([2.0, 2.0])
    assert mixture_mid_df(MixingLaw.exponential(1.0), FRECHET, x) == pytest.approx(0.5, rel=1e-14)
    assert mixture_mid_df(MixingLaw.degenerate(1.0), FRECHET, x) == pytest.approx(
        mid_df_eval(FRECHET, x), rel=1e-14)
    assert mixture_mid_df(MixingLaw.exponential(1.0), FRECHET, np.array([-1.0, 2.0])) == 0.0
    # closed form for the unit-exponential mixture of the unit product law
    pts = np.stack(np.meshgrid(LOG_AXIS, LOG_AXIS, indexing="ij"), axis=-1).reshape(-1, 2)
    want = 1.0 / (1.0 + 1.0 / pts[:, 0] + 1.0 / pts[:, 1])
    np.testing.assert_allclose(
        mixture_mid_df(MixingLaw.exponential(1.0), FRECHET, pts), want, rtol=1e-14)
    # gamma(2) mixing: (1 + sum x_i^-1)^-2
    want2 = (1.0 + 1.0 / pts[:, 0] + 1.0 / pts[:, 1]) ** -2.0
    np.testing.assert_allclose(
        mixture_mid_df(MixingLaw.gamma(2.0), FRECHET, pts), want2, rtol=1e-14)


def test_mixture_df_is_a_df():
    # the mixture formula must itself survive the power-1 d.f checks
    for mixing in (MixingLaw.exponential(1.0), MixingLaw.gamma(2.0)):
        df = lambda pts: mixture_mid_df(mixing, FRECHET, pts)
        axes = [np.concatenate([[-1.0, 0.0], LOG_AXIS])] * 2
        assert mid_power_check(df, axes, powers=(1.0,)).passed
        assert support_rectangle_check(df, axes).passed


def test_extremal_sampler_identity():
    # empirical joint d.f of the randomly-stopped extremal process equals
    # the mixture formula, for every shipped mixing/shape combination
    n = 100_000
    tol = 3.0 / math.sqrt(n) + 0.005
    pts7 = np.stack(np.meshgrid(LOG_AXIS, LOG_AXIS, indexing="ij"), axis=-1).reshape(-1, 2)
    cases = ((MixingLaw.exponential(1.0), (1.0, 1.0)),
             (MixingLaw.gamma(2.0), (1.0, 1.0)),
             (MixingLaw.exponential(1.0), (2.0, 0.5)),
             (MixingLaw.degenerate(1.0), (1.0, 1.0)))
    for i, (mixing, gamma) in enumerate(cases):
        law = MidLaw("product-frechet", gamma)
        draws = blocked_draw(72, (9, 2 + i), n,
                             lambda rng, m: sample_extremal_at_random_time(mixing, law, rng, m))
        emp = empirical_df(draws, pts7)
        want = mixture_mid_df(mixing, law, pts7)
        assert np.abs(emp - want).max() < tol, (mixing.kind, gamma)


def test_extremal_sampler_marginal():
    # first coordinate at x=1: the margin collapses to the transform at 1
    mixing = MixingLaw.exponential(1.0)
    draws = blocked_draw(73, (9, 6), 100_000,
                         lambda rng, m: sample_extremal_at_random_time(mixing, FRECHET, rng, m))
    marg = (draws[:, 0] <= 1.0).mean()
    assert abs(marg - 0.5) < 0.01


def test_extremal_sampler_rejects_other_kinds():
    law = MidLaw("product-exponential", (1.0, 1.0))
    with pytest.raises(ValueError):
        sample_extremal_at_random_time(MixingLaw.exponential(1.0), law, np.random.default_rng(0))
