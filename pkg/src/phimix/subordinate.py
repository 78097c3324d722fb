"""Subordination: the mixture CF as a stable process at an operational time.

The mixture CF ``h = phi(psi)`` generates a process ``X(T(t))`` where ``X``
is strictly stable with exponent ``psi`` and the directing process ``T``
has LT ``phi**t`` at time ``t``.  Marginals have CF ``h**t``; at ``t = 1``
the marginal is exactly the power mixture itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mixing import MixingLaw
from .mixtures import mixture_cf
from .stable import StableExponent, sample_strictly_stable

__all__ = [
    "SubordinatedSpec",
    "directing_lt",
    "subordinated_cf",
    "sample_subordinated_path",
]

_DIRECTING_KINDS = ("gamma", "exponential", "degenerate")


@dataclass(frozen=True)
class SubordinatedSpec:
    """Base stable exponent, directing law, and marginal time grid.

    The directing law must have closed-form convolution powers so that
    increments are exactly samplable: gamma (shape ``nu*dt``), exponential
    (the shape-1 gamma case), or degenerate (deterministic drift
    ``point*dt``).
    """

    exponent: StableExponent
    directing: MixingLaw
    times: tuple = (1.0,)

    def __post_init__(self):
        if getattr(self.directing, "kind", None) not in _DIRECTING_KINDS:
            raise ValueError(
                "directing law must be gamma, exponential, or degenerate")
        times = tuple(float(t) for t in self.times)
        if not times or times[0] <= 0.0:
            raise ValueError("times must be positive")
        if not all(a < b for a, b in zip(times, times[1:])):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", times)


def directing_lt(spec, t_time, s):
    """LT of the directing process at time ``t_time``: ``phi(s)**t_time``."""
    if t_time <= 0.0:
        raise ValueError("time must be positive")
    return spec.directing.lt(s) ** float(t_time)


def subordinated_cf(spec, t_time, t):
    """Marginal CF at time ``t_time``: ``phi(psi(t))**t_time``."""
    if t_time <= 0.0:
        raise ValueError("time must be positive")
    base = mixture_cf(spec.directing, spec.exponent, t)
    return np.asarray(base) ** float(t_time) if np.ndim(base) else \
        complex(base ** float(t_time))


def sample_subordinated_path(spec, rng, size=None):
    """Sample the path at the spec's time grid.

    Directing increments over ``[t_{i-1}, t_i]`` are gamma with shape
    ``nu*dt`` (deterministic ``point*dt`` for the degenerate kind), and the
    stable increment over the interval is ``dT**(1/alpha)`` times a strictly
    stable draw.  Cumulative sums give the path; the marginal at ``t_i``
    has CF ``phi(psi(.))**t_i``.

    Returns
    -------
    ndarray
        Shape ``(len(times),)`` for a single path (``size=None``) or
        ``(size, len(times))``.
    """
    scalar = size is None
    m = 1 if scalar else int(size)
    times = spec.times
    dts = np.diff(np.concatenate(([0.0], times)))
    law = spec.directing
    increments = np.empty((m, len(times)))
    for i, dt in enumerate(dts):
        if law.kind == "degenerate":
            d_time = np.full(m, law.point * dt)
        else:
            d_time = rng.gamma(law.shape * dt, law.scale, m)
        s = sample_strictly_stable(spec.exponent, rng, m)
        increments[:, i] = d_time ** (1.0 / spec.exponent.alpha) * s
    path = np.cumsum(increments, axis=1)
    return path[0] if scalar else path
