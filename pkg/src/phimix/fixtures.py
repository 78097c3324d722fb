"""Negative fixtures: laws designed to fail the numerical checks.

Every validity check in the package (complete monotonicity, CF
positive-semidefiniteness, MID power and support checks) ships with at
least one fixture it rejects, so the checks themselves are falsifiable.
All fixtures are exactly computable, with the violating values known in
closed form.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "bernoulli_lt",
    "uniform_cf",
    "not_a_cf",
    "lshaped_df",
    "nqd_lattice_df",
]


def bernoulli_lt(s):
    """LT ``0.5 + 0.5*exp(-s)`` of a fair Bernoulli mass on {0, 1}.

    A valid LT, but not self-decomposable: the candidate factor
    ``phi(s)/phi(cs)`` violates complete monotonicity at order 1.
    """
    s = np.asarray(s, dtype=float)
    out = 0.5 + 0.5 * np.exp(-s)
    return float(out) if out.ndim == 0 else out


def uniform_cf(t):
    """CF ``sin(t)/t`` of the uniform law on (-1, 1).

    A valid CF with real zeros at multiples of pi, hence not infinitely
    divisible and not class-L: the factor ``f(t)/f(ct)`` divides by zero
    or exceeds modulus 1 on symmetric grids reaching the zeros.
    """
    t = np.asarray(t, dtype=float)
    out = np.sinc(t / np.pi)
    return float(out) if out.ndim == 0 else out


def not_a_cf(t):
    """``1 + t**2``: exceeds modulus 1, indefinite on any 3-point grid."""
    t = np.asarray(t, dtype=float)
    out = 1.0 + t ** 2
    return float(out) if out.ndim == 0 else out


def lshaped_df(x):
    """d.f of mass 1/2 at (0, 1) and 1/2 at (1, 0); points shape (..., 2).

    The positivity set on a grid covering [0, 1]^2 is L-shaped rather than
    a product of intervals, and fractional powers assign negative mass to
    the cell ((0,0), (1,1)): the rectangle mass of ``H**s`` there is
    ``1 - 2*0.5**s``, negative for every ``s < 1``.  Fails both MID checks.
    """
    x = np.asarray(x, dtype=float)
    out = (0.5 * ((x[..., 0] >= 0.0) & (x[..., 1] >= 1.0))
           + 0.5 * ((x[..., 0] >= 1.0) & (x[..., 1] >= 0.0)))
    return float(out) if out.ndim == 0 else out


def nqd_lattice_df(x):
    """d.f of the lattice law with masses 0.1, 0.4, 0.4, 0.1 on {0,1}^2.

    Negatively quadrant dependent: the support is the full positive
    quadrant (so the rectangle-support check passes), but powers fail the
    two-increasing property on the cell ((0,0), (1,1)), whose ``H**s`` mass
    is ``1 - 2*0.5**s + 0.1**s``, negative for moderate ``s < 1``.
    """
    x = np.asarray(x, dtype=float)
    a = (x[..., 0] >= 0.0).astype(float)
    b = (x[..., 1] >= 0.0).astype(float)
    a1 = (x[..., 0] >= 1.0).astype(float)
    b1 = (x[..., 1] >= 1.0).astype(float)
    out = 0.1 * a * b + 0.4 * a * b1 + 0.4 * a1 * b + 0.1 * a1 * b1
    return float(out) if np.ndim(out) == 0 else out
