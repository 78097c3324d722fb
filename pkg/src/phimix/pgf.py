"""Counting laws with PGF ``s**j * phi((1 - s**k)/theta)``.

``phi`` is the LT of a positive mixing law ``Z``.  The family is realized
exactly by the mixed-Poisson representation ``N = j + k*M`` with
``M ~ Poisson(Z/theta)`` given ``Z``; sampling never inverts the PGF.
As ``theta -> 0`` the scaled law ``theta*N`` converges to ``k*Z``, which
is the content of :func:`check_lemma22_limit`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .mixing import MixingLaw

__all__ = [
    "PgfFamily",
    "pgf_eval",
    "pgf_sample",
    "pgf_pmf",
    "scaled_lt",
    "Lemma22Report",
    "check_lemma22_limit",
]


@dataclass(frozen=True)
class PgfFamily:
    """Counting family ``(mixing, theta, shift j, stride k)``.

    Support is ``{j + k*m : m = 0, 1, ...}``; the PGF is
    ``P(s) = s**j * phi((1 - s**k)/theta)``.
    """

    mixing: MixingLaw
    theta: float
    shift: int = 0
    stride: int = 1

    def __post_init__(self):
        if self.theta <= 0.0:
            raise ValueError("theta must be positive")
        if int(self.shift) != self.shift or self.shift < 0:
            raise ValueError("shift must be a nonnegative integer")
        if int(self.stride) != self.stride or self.stride < 1:
            raise ValueError("stride must be a positive integer")


def pgf_eval(family, s):
    """PGF at ``s`` in [0, 1]; scalar in, scalar out."""
    s = np.asarray(s, dtype=float)
    if np.any((s < 0.0) | (s > 1.0)):
        raise ValueError("PGF argument must lie in [0, 1]")
    out = (s ** family.shift
           * family.mixing.lt((1.0 - s ** family.stride) / family.theta))
    return float(out) if out.ndim == 0 else out


def pgf_sample(family, rng, size=None):
    """Exact draw via the mixed-Poisson representation."""
    z = family.mixing.sample(rng, size)
    m = rng.poisson(np.asarray(z) / family.theta, size)
    return family.shift + family.stride * m


def pgf_pmf(family, m_max):
    """Closed-form pmf on the support points ``j + k*m``, ``m <= m_max``.

    Degenerate mixing gives Poisson(``point/theta``); exponential mixing the
    geometric law with success probability ``theta/(theta + scale)``;
    gamma mixing the negative binomial with the same success probability
    and size ``shape``.

    Returns
    -------
    support : ndarray of int
    probs : ndarray
    tail : float
        Mass beyond ``j + k*m_max``; ``probs.sum() + tail`` is 1 exactly.
    """
    m = np.arange(int(m_max) + 1)
    mixing = family.mixing
    if mixing.kind == "degenerate":
        mu = mixing.point / family.theta
        if mu == 0.0:
            probs = (m == 0).astype(float)
        else:
            logp = -mu + m * math.log(mu) - np.array(
                [math.lgamma(v + 1.0) for v in m])
            probs = np.exp(logp)
    elif mixing.kind == "exponential":
        p = family.theta / (family.theta + mixing.scale)
        probs = p * (1.0 - p) ** m
    elif mixing.kind == "gamma":
        p = family.theta / (family.theta + mixing.scale)
        nu = mixing.shape
        logp = (nu * math.log(p) + m * math.log1p(-p)
                + np.array([math.lgamma(v + nu) for v in m])
                - math.lgamma(nu)
                - np.array([math.lgamma(v + 1.0) for v in m]))
        probs = np.exp(logp)
    else:
        raise ValueError(
            "closed-form pmf is available for built-in mixing kinds only")
    support = family.shift + family.stride * m
    return support, probs, float(1.0 - probs.sum())


def scaled_lt(family, v):
    """LT of the scaled count ``theta*N`` at ``v >= 0``.

    Equals ``exp(-v*j*theta) * phi((1 - exp(-v*k*theta))/theta)``, the PGF
    evaluated at ``exp(-v*theta)``.
    """
    v = np.asarray(v, dtype=float)
    if np.any(v < 0.0):
        raise ValueError("LT argument must be nonnegative")
    out = pgf_eval(family, np.exp(-v * family.theta))
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Lemma22Report:
    """Sup-distance of the scaled-count LT to its small-theta limit."""

    thetas: tuple
    sup_errors: tuple
    v_grid: np.ndarray
    values: np.ndarray   # (len(thetas), len(v_grid)) scaled LTs
    target: np.ndarray   # limit LT phi(stride * v) on the grid
    decreasing: bool


def check_lemma22_limit(family, thetas, v_grid):
    """Tabulate ``sup_v |scaled_lt(v) - phi(stride*v)|`` along ``thetas``.

    The limit of ``theta*N`` as ``theta -> 0`` is ``stride*Z``, so the
    target LT is ``phi(stride*v)``; the shift contributes nothing in the
    limit.  The report records whether the sup-error column is strictly
    decreasing.
    """
    v_grid = np.asarray(v_grid, dtype=float)
    target = np.asarray(family.mixing.lt(family.stride * v_grid))
    values = np.empty((len(thetas), len(v_grid)))
    sups = []
    for i, theta in enumerate(thetas):
        values[i] = scaled_lt(replace(family, theta=float(theta)), v_grid)
        sups.append(float(np.abs(values[i] - target).max()))
    decreasing = all(a > b for a, b in zip(sups, sups[1:]))
    return Lemma22Report(tuple(float(t) for t in thetas), tuple(sups),
                         v_grid, values, target, decreasing)
