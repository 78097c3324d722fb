"""Max-infinitely divisible d.fs on R^d, their mixtures, and validity checks.

A d.f ``H`` is max-infinitely divisible when ``H**s`` is a d.f for every
``s > 0``.  Randomizing the power by a positive law with LT ``phi`` gives
the mixture d.f ``phi(-log H)``, realized by evaluating an extremal process
governed by ``H`` at an independent random time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mixing import lt_eval

__all__ = [
    "MidLaw",
    "mid_df_eval",
    "mid_power_sample",
    "MidViolation",
    "MidCheckReport",
    "mid_power_check",
    "SupportReport",
    "support_rectangle_check",
    "mixture_mid_df",
    "sample_extremal_at_random_time",
]

_MID_KINDS = ("product-frechet", "product-exponential")


@dataclass(frozen=True)
class MidLaw:
    """A product-form d.f on R^d (d >= 2) with exactly samplable powers.

    Kinds:

    * ``product-frechet``: independent Frechet coordinates,
      ``H(x) = exp(-sum((x_i - corner_i)**(-shape_i)))`` for
      ``x_i > corner_i``, else 0.
    * ``product-exponential``: reversed-exponential margins
      ``exp(min(x_i, 0))``, supported on the whole space (for
      negative-orthant tests).

    Powers ``H**t`` rescale the per-coordinate exponents, so they are again
    product laws and can be sampled exactly.
    """

    kind: str
    shapes: tuple = (1.0, 1.0)
    corners: tuple = None

    def __post_init__(self):
        if self.kind not in _MID_KINDS:
            raise ValueError(f"unknown MID kind {self.kind!r}")
        shapes = tuple(float(g) for g in self.shapes)
        if len(shapes) < 2:
            raise ValueError("need dimension d >= 2")
        if any(g <= 0.0 for g in shapes):
            raise ValueError("shapes must be positive")
        object.__setattr__(self, "shapes", shapes)
        corners = self.corners
        if corners is None:
            corners = (0.0,) * len(shapes)
        corners = tuple(float(c) for c in corners)
        if len(corners) != len(shapes):
            raise ValueError("corners must match the dimension")
        object.__setattr__(self, "corners", corners)

    @property
    def dimension(self):
        return len(self.shapes)


def mid_df_eval(law, x):
    """Evaluate the d.f at points ``x`` of shape ``(..., d)``."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != law.dimension:
        raise ValueError("point dimension mismatch")
    if law.kind == "product-frechet":
        shapes = np.asarray(law.shapes)
        rel = x - np.asarray(law.corners)
        inside = np.all(rel > 0.0, axis=-1)
        with np.errstate(divide="ignore", over="ignore"):
            expo = np.where(rel > 0.0, rel, 1.0) ** (-shapes)
        out = np.where(inside, np.exp(-np.sum(expo, axis=-1)), 0.0)
    else:
        out = np.exp(np.sum(np.minimum(x, 0.0), axis=-1))
    return float(out) if out.ndim == 0 else out


def mid_power_sample(law, t, rng, size=None):
    """Draw from ``H**t``; ``t`` is a scalar or a per-draw array.

    For the Frechet kind coordinate ``i`` has d.f ``exp(-t*x**(-shape_i))``
    and is drawn as ``(t/E)**(1/shape_i)`` with ``E`` standard exponential;
    the reversed-exponential kind uses ``log(U)/t`` per coordinate.
    """
    d = law.dimension
    m = 1 if size is None else int(size)
    t = np.broadcast_to(np.asarray(t, dtype=float), (m,))
    if np.any(t <= 0.0):
        raise ValueError("power must be positive")
    if law.kind == "product-frechet":
        e = rng.exponential(1.0, (m, d))
        out = (np.asarray(law.corners)
               + (t[:, None] / e) ** (1.0 / np.asarray(law.shapes)))
    else:
        u = rng.random((m, d))
        out = np.log(u) / t[:, None]
    return out[0] if size is None else out


@dataclass(frozen=True)
class MidViolation:
    """One located failure of a grid d.f check."""

    power: float
    check: str       # 'range', 'monotone', or 'rectangle'
    point: tuple     # grid coordinates (cell upper corner for rectangles)
    value: float


@dataclass(frozen=True)
class MidCheckReport:
    """Outcome of :func:`mid_power_check`."""

    passed: bool
    violations: tuple
    powers: tuple


def _df_on_grid(df, axes):
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack(mesh, axis=-1)
    if isinstance(df, MidLaw):
        return mid_df_eval(df, pts)
    return np.asarray(df(pts), dtype=float)


def mid_power_check(df, axes, powers=(0.5, 1.0, 2.0, 5.0), tol=1e-9):
    """Check that ``H**s`` behaves like a d.f on a rectangular grid.

    For every power ``s`` the tabulated ``H**s`` must lie in [0, 1], be
    non-decreasing along each coordinate, and for d = 2 assign nonnegative
    mass ``P(b) - P(b1,a2) - P(a1,b2) + P(a)`` to every grid cell.  All
    violations are enumerated with their grid location.  This is the
    defining max-infinite-divisibility property checked numerically.

    Parameters
    ----------
    df : MidLaw or callable
        Callables receive points of shape ``(..., d)``.
    axes : sequence of 1-d increasing arrays
    powers : sequence of positive floats
    tol : float
    """
    axes = [np.asarray(a, dtype=float) for a in axes]
    h = _df_on_grid(df, axes)
    violations = []
    grids = np.meshgrid(*axes, indexing="ij")
    for s in powers:
        if s <= 0.0:
            raise ValueError("powers must be positive")
        p = h ** s
        bad = (p < -tol) | (p > 1.0 + tol)
        for idx in zip(*np.nonzero(bad)):
            violations.append(MidViolation(
                float(s), "range",
                tuple(float(g[idx]) for g in grids), float(p[idx])))
        for axis in range(p.ndim):
            step = np.diff(p, axis=axis)
            for idx in zip(*np.nonzero(step < -tol)):
                upper = list(idx)
                upper[axis] += 1
                upper = tuple(upper)
                violations.append(MidViolation(
                    float(s), "monotone",
                    tuple(float(g[upper]) for g in grids),
                    float(step[idx])))
        if p.ndim == 2:
            mass = p[1:, 1:] - p[:-1, 1:] - p[1:, :-1] + p[:-1, :-1]
            for idx in zip(*np.nonzero(mass < -tol)):
                upper = (idx[0] + 1, idx[1] + 1)
                violations.append(MidViolation(
                    float(s), "rectangle",
                    tuple(float(g[upper]) for g in grids),
                    float(mass[idx])))
    return MidCheckReport(not violations, tuple(violations),
                          tuple(float(s) for s in powers))


@dataclass(frozen=True)
class SupportReport:
    """Outcome of :func:`support_rectangle_check`."""

    passed: bool
    violations: tuple    # grid points where positivity is not product-form


def support_rectangle_check(df, axes):
    """Check that the positivity set of the d.f is a product of intervals.

    Tabulates the d.f on the grid and compares the indicator of positivity
    with the outer product of its per-coordinate projections; any mismatch
    is reported with its grid location.
    """
    axes = [np.asarray(a, dtype=float) for a in axes]
    h = _df_on_grid(df, axes)
    pos = h > 0.0
    expected = np.ones_like(pos)
    for axis in range(pos.ndim):
        other = tuple(i for i in range(pos.ndim) if i != axis)
        proj = pos.any(axis=other)
        shape = [1] * pos.ndim
        shape[axis] = -1
        expected = expected & proj.reshape(shape)
    grids = np.meshgrid(*axes, indexing="ij")
    violations = [
        tuple(float(g[idx]) for g in grids)
        for idx in zip(*np.nonzero(pos != expected))
    ]
    return SupportReport(not violations, tuple(violations))


def mixture_mid_df(mixing, df, x):
    """Mixture d.f ``phi(-log H(x))``; 0 wherever ``H(x) = 0``.

    ``df`` may be a :class:`MidLaw` or a callable on points ``(..., d)``.
    The boundary convention is the continuous limit ``phi(inf) = 0``.
    """
    if isinstance(df, MidLaw):
        h = mid_df_eval(df, x)
    else:
        h = np.asarray(df(np.asarray(x, dtype=float)), dtype=float)
    h = np.asarray(h, dtype=float)
    safe = np.where(h > 0.0, h, 1.0)
    out = np.where(h > 0.0, lt_eval(mixing, -np.log(safe)), 0.0)
    return float(out) if out.ndim == 0 else out


def sample_extremal_at_random_time(mixing, law, rng, size=None):
    """Draw from the extremal process of ``law`` at an independent random time.

    Draws ``Z`` from the mixing law and then one vector from ``H**Z``;
    the joint d.f of the output is ``mixture_mid_df(mixing, law, .)``.
    Only the product-Frechet kind is supported, since its powers are
    directly samplable.
    """
    if not isinstance(law, MidLaw) or law.kind != "product-frechet":
        raise ValueError("extremal sampling needs a product-frechet MidLaw")
    z = mixing.sample(rng, size)
    return mid_power_sample(law, z, rng, size)
