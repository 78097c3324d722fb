import math

import numpy as np
import pytest

from phimix import MixingLaw, check_complete_monotonicity, lt_eval, sample_mixing


def test_lt_closed_forms():
    # gamma: (1 + sigma*s)^(-nu); exponential: 1/(1 + sigma*s); degenerate: e^(-cs)
    assert lt_eval(MixingLaw.gamma(1.0, 1.0), 0.0) == 1.0
    assert lt_eval(MixingLaw.exponential(1.0), 1.0) == 0.5
    assert lt_eval(MixingLaw.degenerate(2.0), 3.0) == pytest.approx(math.exp(-6.0), rel=1e-15)
    assert lt_eval(MixingLaw.gamma(2.0, 3.0), 1.0) == pytest.approx(0.0625, rel=1e-15)


def test_lt_vectorized_and_domain():
    s = np.linspace(0.0, 5.0, 11)
    law = MixingLaw.gamma(2.0, 1.0)
    np.testing.assert_allclose(law.lt(s), (1.0 + s) ** -2.0, rtol=1e-15)
    with pytest.raises(ValueError):
        law.lt(-0.1)


def test_lt_monotone_nonincreasing():
    s = np.linspace(0.0, 10.0, 101)
    for law in (MixingLaw.gamma(0.5), MixingLaw.exponential(2.0), MixingLaw.degenerate(1.5)):
        vals = law.lt(s)
        assert np.all(np.diff(vals) <= 0.0)
        assert vals[0] == 1.0


def test_lt_complex_branches():
    law = MixingLaw.gamma(2.0, 1.0)
    z = 1.0 + 2.0j
    assert law.lt_complex(z) == pytest.approx((1.0 + z) ** -2.0, rel=1e-14)
    # principal-branch evaluation must refuse the cut on the negative real axis
    with pytest.raises(ValueError):
        law.lt_complex(-2.0 + 0.0j)
    assert MixingLaw.degenerate(1.0).lt_complex(-2.0 + 0.0j) == pytest.approx(
        math.exp(2.0), rel=1e-14)


def test_constructor_validation():
    with pytest.raises(ValueError):
        MixingLaw("cauchy")
    with pytest.raises(ValueError):
        MixingLaw.gamma(-1.0)
    with pytest.raises(ValueError):
        MixingLaw.gamma(1.0, 0.0)
    with pytest.raises(ValueError):
        MixingLaw.degenerate(-0.5)
    with pytest.raises(ValueError):
        MixingLaw("exponential", shape=2.0)


def test_degenerate_sampling_exact():
    rng = np.random.default_rng(0)
    law = MixingLaw.degenerate(2.0)
    assert sample_mixing(law, rng) == 2.0
    assert np.all(sample_mixing(law, rng, 16) == 2.0)


def test_empirical_lt_matches_closed_form():
    # mean of e^(-s Z) over 10^6 draws vs the transform, uniformly on [0, 5]
    rng = np.random.default_rng(11)
    n = 1_000_000
    s = np.linspace(0.0, 5.0, 11)
    for law in (MixingLaw.exponential(1.0), MixingLaw.gamma(2.0, 1.0)):
        z = sample_mixing(law, rng, n)
        emp = np.exp(-s[:, None] * z[None, :]).mean(axis=1)
        assert np.abs(emp - law.lt(s)).max() < 3.0 / math.sqrt(n)


def test_sample_moments():
    rng = np.random.default_rng(12)
    z = sample_mixing(MixingLaw.gamma(2.0, 1.0), rng, 1_000_000)
    assert abs(z.mean() - 2.0) < 0.01
    assert MixingLaw.gamma(2.0, 1.0).mean() == 2.0
    assert MixingLaw.degenerate(3.0).mean() == 3.0


def test_cm_passes_known_transforms():
    report = check_complete_monotonicity(lambda s: np.exp(-s), 5.0)
    assert report.passed and not report.violations
    assert check_complete_monotonicity(lambda s: 1.0 / (1.0 + s), 5.0).passed
    for law in (MixingLaw.gamma(0.5), MixingLaw.gamma(2.0), MixingLaw.exponential(1.0),
                MixingLaw.degenerate(1.0), MixingLaw.degenerate(0.0)):
        assert check_complete_monotonicity(law.lt, 5.0).passed


def test_cm_rejects_cosine():
    # cos is not a transform of a positive law; sign violation at order 2
    report = check_complete_monotonicity(np.cos, 3.0)
    assert not report.passed
    assert 2 in report.violating_orders
    assert report.violations
    assert min(v.value for v in report.violations) < 0.0


def test_cm_rejects_increasing_function():
    assert not check_complete_monotonicity(lambda s: s, 5.0).passed


def test_cm_argument_validation():
    with pytest.raises(ValueError):
        check_complete_monotonicity(np.exp, 0.0)
    with pytest.raises(ValueError):
        check_complete_monotonicity(np.exp, 5.0, max_order=0)
