"""Self-decomposability (class-L) checks and constructions.

A law is in class L when its CF factors as ``f(t) = f(ct) * f_c(t)`` with
``f_c`` again a CF, for every ``0 < c < 1``; positive laws carry the same
property through their LTs.  Both directions are witnessed numerically:
the LT factor is screened by finite-difference complete monotonicity and
the CF factor by the Toeplitz positive-semidefiniteness check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .empirical import psd_toeplitz_check
from .mixing import check_complete_monotonicity, lt_eval
from .mixtures import mixture_cf

__all__ = [
    "selfdecomp_factor",
    "FactorCheckEntry",
    "FactorCheckReport",
    "classl_factor_check",
    "CfCheckEntry",
    "CfCheckReport",
    "selfdecomp_cf_check",
    "construct_classl_mixture",
    "unimodality_probe",
]


def selfdecomp_factor(law, c, s):
    """Candidate factor LT ``phi(s)/phi(c*s)`` for ``0 < c < 1``.

    For a class-L law the factor is itself an LT; it always equals 1 at
    ``s = 0`` and stays in (0, 1] because valid LTs are positive and
    decreasing.
    """
    if not 0.0 < c < 1.0:
        raise ValueError("c must lie in (0, 1)")
    s = np.asarray(s, dtype=float)
    out = np.asarray(lt_eval(law, s)) / np.asarray(lt_eval(law, c * s))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class FactorCheckEntry:
    """Complete-monotonicity verdict for the factor at one ``c``."""

    c: float
    passed: bool
    violating_orders: tuple
    worst_value: float


@dataclass(frozen=True)
class FactorCheckReport:
    """Outcome of :func:`classl_factor_check` over the whole c-grid."""

    passed: bool
    entries: tuple


def classl_factor_check(law, c_grid, s_grid, tol=1e-9, max_order=6):
    """Screen ``phi(s)/phi(cs)`` for complete monotonicity at every ``c``.

    A pass at every ``c`` is the numerical witness that the positive law
    with LT ``phi`` is self-decomposable; membership must hold for each
    ``c`` individually, never on average.  ``law`` may be a mixing law or
    a bare LT callable; ``s_grid`` fixes the inspection window (its length
    sets the anchor count).
    """
    s_grid = np.asarray(s_grid, dtype=float)
    entries = []
    for c in c_grid:
        report = check_complete_monotonicity(
            lambda s, c=c: selfdecomp_factor(law, c, s),
            float(s_grid.max()), max_order=max_order,
            anchors=len(s_grid), tol=tol)
        worst = min((v.value for v in report.violations), default=0.0)
        entries.append(FactorCheckEntry(
            float(c), report.passed, report.violating_orders, worst))
    return FactorCheckReport(all(e.passed for e in entries), tuple(entries))


@dataclass(frozen=True)
class CfCheckEntry:
    """Verdict for the CF factor ``f(t)/f(ct)`` at one ``c``."""

    c: float
    passed: bool
    min_eigenvalue: float
    max_modulus: float
    zero_division: bool


@dataclass(frozen=True)
class CfCheckReport:
    """Outcome of :func:`selfdecomp_cf_check` over the whole c-grid."""

    passed: bool
    entries: tuple


def selfdecomp_cf_check(f, c_grid, t_grid, tol=1e-8, zero_tol=1e-13):
    """Witness that ``g_c(t) = f(t)/f(ct)`` is a CF for every ``c``.

    For each ``c`` the factor is required to be finite on the grid (a zero
    of ``f`` in the denominator is reported as a violation; ID CFs have no
    real zero), bounded by ``1 + tol`` in modulus, and to pass the Toeplitz
    positive-semidefiniteness check built from the grid.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    entries = []
    for c in c_grid:
        if not 0.0 < c < 1.0:
            raise ValueError("c must lie in (0, 1)")

        def factor(tau, c=c):
            tau = np.asarray(tau, dtype=float)
            num = np.asarray(f(tau), dtype=complex)
            den = np.asarray(f(c * tau), dtype=complex)
            small = np.abs(den) < zero_tol
            return np.where(small, np.inf, num) / np.where(small, 1.0, den)

        with np.errstate(invalid="ignore", over="ignore"):
            g = factor(t_grid)
        finite = bool(np.all(np.isfinite(g)))
        if not finite:
            entries.append(CfCheckEntry(float(c), False, float("nan"),
                                        float("inf"), True))
            continue
        max_mod = float(np.abs(g).max())
        with np.errstate(invalid="ignore", over="ignore"):
            psd = psd_toeplitz_check(factor, t_grid, tol=tol)
        passed = psd.passed and max_mod <= 1.0 + tol
        entries.append(CfCheckEntry(float(c), passed, psd.min_eigenvalue,
                                    max_mod, not psd.finite))
    return CfCheckReport(all(e.passed for e in entries), tuple(entries))


def construct_classl_mixture(mixing, exponent, c_grid=(0.3, 0.5, 0.7),
                             s_max=10.0, anchors=25):
    """Build the mixture CF ``t -> phi(psi(t))`` of a class-L mixing law.

    The mixing law must first pass :func:`classl_factor_check` on the given
    c-grid; mixtures of strictly stable laws inherit class-L membership
    from the mixer, so the returned CF passes :func:`selfdecomp_cf_check`.

    Returns
    -------
    callable
        Vectorized CF of the mixture.
    """
    s_grid = np.linspace(0.0, float(s_max), int(anchors))
    report = classl_factor_check(mixing, c_grid, s_grid)
    if not report.passed:
        bad = [e.c for e in report.entries if not e.passed]
        raise ValueError(
            f"mixing law fails the class-L factor check at c = {bad}")

    def cf(t):
        return mixture_cf(mixing, exponent, t)

    return cf


def unimodality_probe(values, grid_points=201, bandwidth=None):
    """Count the modes of a Gaussian kernel-density estimate of a sample.

    Soft diagnostic: mixtures in class L are expected to look unimodal,
    but small samples can ripple, so callers should treat a count above 1
    as a warning rather than a failure.  Returns ``(n_modes, warn)``.
    """
    x = np.asarray(values, dtype=float)
    if bandwidth is None:
        # Silverman's rule on a robust spread estimate
        q75, q25 = np.percentile(x, [75, 25])
        spread = min(x.std(), (q75 - q25) / 1.349)
        bandwidth = 0.9 * spread * len(x) ** (-0.2)
    lo, hi = np.percentile(x, [0.5, 99.5])
    grid = np.linspace(lo, hi, int(grid_points))
    density = np.zeros_like(grid)
    step = 1 << 12
    for start in range(0, len(x), step):
        chunk = x[start:start + step]
        density += np.exp(
            -0.5 * ((grid[:, None] - chunk[None, :]) / bandwidth) ** 2
        ).sum(axis=1)
    density /= len(x) * bandwidth * np.sqrt(2.0 * np.pi)
    inner = density[1:-1]
    candidates = np.nonzero((inner > density[:-2]) & (inner > density[2:]))[0] + 1
    top = density.max()
    n_modes = 0
    for p in candidates:
        height = density[p]
        if height < 0.05 * top:
            continue
        # prominence: drop to the higher of the two base valleys, where a
        # base valley is the minimum before the nearest higher ground
        bases = []
        for sl in (slice(p - 1, None, -1), slice(p + 1, None)):
            seg = density[sl]
            above = np.nonzero(seg > height)[0]
            seg = seg[:above[0]] if len(above) else seg
            bases.append(seg.min() if len(seg) else height)
        if height - max(bases) >= 0.2 * height:
            n_modes += 1
    return n_modes, n_modes != 1
