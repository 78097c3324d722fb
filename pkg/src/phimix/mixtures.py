"""Power mixtures of stable laws: CF identities and exact sampling.

Randomizing the power ``s`` of a stable CF ``omega**s = exp(-s*psi)`` by a
positive law ``Z`` with LT ``phi`` gives the mixture CF ``phi(psi(t))``.
The mixture is sampled exactly as ``Z**(1/alpha) * S`` with ``S`` strictly
stable, since scaling a strictly stable law multiplies its exponent.
"""

from __future__ import annotations

import numpy as np

from .mixing import MixingLaw
from .stable import StableExponent, sample_strictly_stable, stable_cf_exponent

__all__ = ["mixture_cf", "linnik_cf", "sample_mixture_id"]


def mixture_cf(mixing, exponent, t):
    """CF of the power mixture: ``phi(psi(t))``.

    Parameters
    ----------
    mixing : MixingLaw
        Positive mixing law with LT ``phi``.
    exponent : StableExponent or callable
        Stable exponent ``psi``, or any exponent function ``t -> psi(t)``
        with nonnegative real part (negative definite in t).
    t : float or ndarray
    """
    psi = exponent(t) if callable(exponent) \
        else stable_cf_exponent(exponent, t)
    return mixing.lt_complex(psi)


def linnik_cf(lam, alpha, beta, nu, t):
    """Generalized Linnik CF ``(1 + lam*|t|**alpha * e^{-i*beta*sgn t})**(-nu)``.

    This is the gamma(``nu``, 1) mixture of the stable exponent
    ``(lam, alpha, beta)``; ``(lam, 2, 0, 1)`` is the Laplace CF
    ``1/(1 + lam*t**2)`` and ``(lam, alpha, 0, 1)`` the classical Linnik
    family.
    """
    exponent = StableExponent(lam, alpha, beta)
    return MixingLaw.gamma(nu, 1.0).lt_complex(stable_cf_exponent(exponent, t))


def sample_mixture_id(mixing, exponent, rng, size=None):
    """Exact draw with CF ``mixture_cf(mixing, exponent, .)``.

    Draws ``Z`` from the mixing law, then an independent strictly stable
    variate, and returns ``Z**(1/alpha) * S``.
    """
    z = mixing.sample(rng, size)
    s = sample_strictly_stable(exponent, rng, size)
    return np.asarray(z) ** (1.0 / exponent.alpha) * s if size is not None \
        else float(z ** (1.0 / exponent.alpha) * s)
