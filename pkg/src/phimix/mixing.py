"""Nonnegative mixing laws presented through Laplace transforms and samplers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MixingLaw",
    "lt_eval",
    "sample_mixing",
    "CmViolation",
    "CmReport",
    "check_complete_monotonicity",
]

_KINDS = ("gamma", "exponential", "degenerate")


@dataclass(frozen=True)
class MixingLaw:
    """A positive random variable given by its Laplace transform and a sampler.

    Built-in kinds:

    * ``gamma``: shape ``nu`` and scale ``sigma``, LT ``(1 + sigma*s)**(-nu)``.
      The scale convention keeps the mixture CF of a stable exponent in the
      form ``(1 + lam*|t|**alpha * ...)**(-nu)`` with ``lam`` carried by the
      exponent, not the mixer.
    * ``exponential``: the shape-1 gamma special case, LT ``1/(1 + sigma*s)``.
    * ``degenerate``: point mass at ``point >= 0``, LT ``exp(-point*s)``.
      Point 0 is the unit of the mixture algebra; as a counting mixer it
      collapses the family to the deterministic count ``shift``.

    The type is open for extension: any object with compatible ``lt``,
    ``lt_complex`` and ``sample`` methods can stand in wherever a MixingLaw
    is accepted.

    Parameters
    ----------
    kind : str
        One of ``'gamma'``, ``'exponential'``, ``'degenerate'``.
    shape : float
        Gamma shape ``nu``; must equal 1 for the exponential kind.
    scale : float
        Scale ``sigma`` for gamma and exponential kinds.
    point : float
        Location of the degenerate kind.
    """

    kind: str
    shape: float = 1.0
    scale: float = 1.0
    point: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown mixing kind {self.kind!r}")
        if self.kind == "degenerate":
            if self.point < 0.0:
                raise ValueError("degenerate point must be nonnegative")
        else:
            if self.shape <= 0.0 or self.scale <= 0.0:
                raise ValueError("shape and scale must be positive")
            if self.kind == "exponential" and self.shape != 1.0:
                raise ValueError("exponential kind requires shape = 1")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def gamma(cls, shape, scale=1.0):
        """Gamma mixing law with LT ``(1 + scale*s)**(-shape)``."""
        return cls("gamma", shape=float(shape), scale=float(scale))

    @classmethod
    def exponential(cls, scale=1.0):
        """Exponential mixing law with LT ``1/(1 + scale*s)``."""
        return cls("exponential", shape=1.0, scale=float(scale))

    @classmethod
    def degenerate(cls, point):
        """Point mass at ``point`` with LT ``exp(-point*s)``."""
        return cls("degenerate", point=float(point))

    # ------------------------------------------------------------------
    # Laplace transform
    # ------------------------------------------------------------------

    def lt(self, s):
        """Laplace transform at real ``s >= 0``; scalar in, scalar out."""
        s = np.asarray(s, dtype=float)
        if np.any(s < 0.0):
            raise ValueError("Laplace transform argument must be nonnegative")
        if self.kind == "degenerate":
            out = np.exp(-self.point * s)
        else:
            out = (1.0 + self.scale * s) ** (-self.shape)
        return float(out) if out.ndim == 0 else out

    def lt_complex(self, z):
        """Analytic continuation of the LT along principal branches.

        For the gamma kinds the branch cut sits where ``1 + scale*z`` hits
        the nonpositive real axis; evaluation there raises.  Every mixture
        use has ``Re z >= 0`` and stays clear of the cut.
        """
        z = np.asarray(z, dtype=complex)
        if self.kind == "degenerate":
            out = np.exp(-self.point * z)
        else:
            w = 1.0 + self.scale * z
            if np.any((w.real <= 0.0) & (np.abs(w.imag) < 1e-15)):
                raise ValueError("complex LT evaluated on its branch cut")
            out = np.exp(-self.shape * np.log(w))
        return complex(out) if out.ndim == 0 else out

    # ------------------------------------------------------------------
    # Sampling and moments
    # ------------------------------------------------------------------

    def sample(self, rng, size=None):
        """Draw from the law using generator ``rng``."""
        if self.kind == "gamma":
            return rng.gamma(self.shape, self.scale, size)
        if self.kind == "exponential":
            return rng.exponential(self.scale, size)
        if size is None:
            return self.point
        return np.full(size, self.point)

    def mean(self):
        """First moment, equal to minus the LT derivative at 0."""
        if self.kind == "degenerate":
            return self.point
        return self.shape * self.scale


def lt_eval(law, s):
    """Evaluate the Laplace transform of ``law`` at ``s >= 0``.

    ``law`` may be a :class:`MixingLaw` or any object with an ``lt`` method;
    a bare callable is used directly.
    """
    if hasattr(law, "lt"):
        return law.lt(s)
    return law(s)


def sample_mixing(law, rng, size=None):
    """Draw from ``law`` with generator ``rng``."""
    return law.sample(rng, size)


@dataclass(frozen=True)
class CmViolation:
    """A finite-difference sign violation at one grid anchor."""

    order: int
    s: float
    value: float


@dataclass(frozen=True)
class CmReport:
    """Outcome of :func:`check_complete_monotonicity`."""

    passed: bool
    violations: tuple
    max_order: int
    step: float

    @property
    def violating_orders(self):
        """Sorted tuple of difference orders with at least one violation."""
        return tuple(sorted({v.order for v in self.violations}))


def check_complete_monotonicity(f, s_max, max_order=6, anchors=25, tol=1e-9):
    """Finite-difference complete-monotonicity witness on ``[0, s_max]``.

    Checks ``(-1)**n * forward_difference_n(f) >= -tol * scale`` for
    ``n = 0 .. max_order`` at uniformly spaced anchors, where ``scale`` is
    the largest magnitude of ``f`` on the evaluation grid (at least 1).
    A pass is a necessary numerical signature of a completely monotone
    function, not a proof; all violations found are enumerated.

    Parameters
    ----------
    f : callable
        Function of one nonnegative argument; vectorized or scalar.
    s_max : float
        Right end of the inspection window.
    max_order : int
        Highest difference order, at most 6.
    anchors : int
        Number of anchor points per order.
    tol : float
        Relative sign tolerance.

    Returns
    -------
    CmReport
    """
    if not 0 < max_order <= 6:
        raise ValueError("max_order must be in 1..6")
    if s_max <= 0.0 or anchors < 2:
        raise ValueError("need s_max > 0 and at least two anchors")
    h = s_max / (anchors - 1 + max_order)
    s = h * np.arange(anchors + max_order)
    try:
        vals = np.asarray(f(s), dtype=float)
        if vals.shape != s.shape:
            raise TypeError
    except TypeError:
        vals = np.array([float(f(x)) for x in s])
    if not np.all(np.isfinite(vals)):
        raise ValueError("function returned non-finite values on the grid")
    scale = max(1.0, float(np.abs(vals).max()))
    violations = []
    diff = vals
    for order in range(max_order + 1):
        if order > 0:
            diff = diff[1:] - diff[:-1]
        signed = (-1.0) ** order * diff[:anchors]
        for idx in np.nonzero(signed < -tol * scale)[0]:
            violations.append(
                CmViolation(order, float(s[idx]), float(signed[idx])))
    return CmReport(not violations, tuple(violations), max_order, h)
