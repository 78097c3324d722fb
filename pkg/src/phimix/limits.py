"""Random-index sums and maxima, their normings, and transfer experiments.

With counts ``N`` drawn from a PGF family and index parameter
``theta -> 0``, normalized sums of i.i.d. increments converge to the power
mixture ``phi(psi)`` of the increments' stable limit, and normalized
component-wise maxima converge to the mixture ``phi(-log H)`` of the
max-stable limit.  The experiments here tabulate the per-theta sup
distances that witness both statements, plus the necessary-and-sufficient
rate condition ``(1 - g_theta(t))/theta -> psi(t)`` on the counting side.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .empirical import blocked_draw, empirical_cf, empirical_df, ks_distance
from .mixing import MixingLaw
from .pgf import PgfFamily, pgf_eval, pgf_sample

__all__ = [
    "attraction_norming",
    "random_sum_sample",
    "random_max_sample",
    "RandomLimitExperiment",
    "ThetaRun",
    "TransferResult",
    "transfer_sum_experiment",
    "transfer_max_experiment",
    "NsReport",
    "ns_condition_check",
]


def attraction_norming(alpha, theta):
    """Default sum norming ``a(theta) = theta**(-1/alpha)``, ``b = 0``.

    With the identification ``theta = 1/n`` this is the classical stable
    norming ``n**(1/alpha)``; shipped cases are symmetric or positive, so
    no centering is ever applied.
    """
    if not 0.0 < alpha <= 2.0:
        raise ValueError("alpha must lie in (0, 2]")
    if theta <= 0.0:
        raise ValueError("theta must be positive")
    return float(theta) ** (-1.0 / float(alpha)), 0.0


def _prepare_family(family, theta, scale_rule):
    """Family at a concrete theta, honoring the configured scale rule."""
    theta = float(theta)
    if scale_rule == "fixed":
        return replace(family, theta=theta)
    if scale_rule == "complement-theta":
        # mixing scale 1 - theta: the geometric family whose exponential
        # sums reproduce the exponential law exactly at every theta
        if not 0.0 < theta < 1.0:
            raise ValueError("complement-theta rule needs theta in (0, 1)")
        mixing = replace(family.mixing, scale=1.0 - theta)
        return replace(family, theta=theta, mixing=mixing)
    raise ValueError(f"unknown scale rule {scale_rule!r}")


def random_sum_sample(counting, increments, a, b, rng, size=None):
    """Normalized random-index sum ``(sum of N increments)/a - N*b``.

    ``N`` is drawn from the counting family, then ``N`` i.i.d. increments
    from the ``increments(rng, m)`` sampler; ``N = 0`` contributes an empty
    sum.  The default configuration is scale-only (``b = 0``).
    """
    scalar = size is None
    m = 1 if scalar else int(size)
    counts = np.atleast_1d(pgf_sample(counting, rng, m))
    total = int(counts.sum())
    sums = np.zeros(m)
    if total > 0:
        x = np.asarray(increments(rng, total), dtype=float)
        positive = counts > 0
        starts = np.concatenate(
            ([0], np.cumsum(counts[positive])))[:-1].astype(np.intp)
        sums[positive] = np.add.reduceat(x, starts)
    out = sums / a - counts * b
    return float(out[0]) if scalar else out


def random_max_sample(counting, vectors, a, b, rng, size=None):
    """Normalized component-wise maximum of ``N`` i.i.d. d-vectors.

    ``N = 0`` draws are redrawn until positive (the maximum of zero vectors
    is undefined); the analytic conditioning rate is ``pgf_eval(., 0)``.
    ``a`` and ``b`` are per-coordinate norming arrays; the result is
    ``(M - b)/a``.
    """
    scalar = size is None
    m = 1 if scalar else int(size)
    counts = np.atleast_1d(pgf_sample(counting, rng, m))
    for _ in range(64):
        zero = counts == 0
        if not zero.any():
            break
        counts[zero] = pgf_sample(counting, rng, int(zero.sum()))
    else:
        raise RuntimeError("counting law keeps drawing N = 0")
    total = int(counts.sum())
    y = np.asarray(vectors(rng, total), dtype=float)
    starts = np.concatenate(([0], np.cumsum(counts)))[:-1].astype(np.intp)
    tops = np.maximum.reduceat(y, starts, axis=0)
    out = (tops - np.asarray(b)) / np.asarray(a)
    return out[0] if scalar else out


@dataclass(frozen=True)
class RandomLimitExperiment:
    """A transfer experiment: counting family, increments, norming, target.

    Fields
    ------
    counting : PgfFamily
        Template family; ``theta`` is replaced by each entry of ``thetas``.
    thetas : tuple
        Strictly decreasing positive index parameters.
    increments : callable
        ``increments(rng, m)`` returning ``m`` scalars (sums) or ``(m, d)``
        vectors (maxima).
    target : callable
        Limit CF on a t-grid (sums) or limit d.f on points (maxima).
    alpha : float or tuple
        Stable index used by the norming; per-coordinate for maxima.
    n : int
        Monte-Carlo sample count per theta.
    grid : ndarray or sequence of axes
        CF grid (sums) or per-coordinate axes (maxima).
    seed, workers, label
        Determinism contract inputs; ``label`` keys the sample streams.
    target_kind : str
        ``'cf'`` for CF sup distance, ``'df'`` for KS distance to a scalar
        d.f (exact fixed-point runs).
    scale_rule : str
        ``'fixed'`` or ``'complement-theta'`` (mixing scale ``1 - theta``).
    stride_adjusted : bool
        Use ``a = (stride/theta)**(1/alpha)`` so that families with stride
        ``k > 1`` are normalized against the same limit.
    """

    counting: PgfFamily
    thetas: tuple
    increments: object
    target: object
    alpha: object
    n: int
    grid: object
    seed: int
    workers: int = 1
    label: int = 0
    target_kind: str = "cf"
    scale_rule: str = "fixed"
    stride_adjusted: bool = True

    def __post_init__(self):
        thetas = tuple(float(t) for t in self.thetas)
        if not all(a > b for a, b in zip(thetas, thetas[1:])):
            raise ValueError("thetas must be strictly decreasing")
        if any(t <= 0.0 for t in thetas):
            raise ValueError("thetas must be positive")
        if self.n < 1:
            raise ValueError("need n >= 1")
        object.__setattr__(self, "thetas", thetas)


@dataclass(frozen=True)
class ThetaRun:
    """Per-theta tabulation of an experiment."""

    theta: float
    grid_points: object
    empirical: np.ndarray
    target: np.ndarray
    sup_distance: float


@dataclass(frozen=True)
class TransferResult:
    """Collected runs plus the monotone-decrease verdict."""

    runs: tuple
    decreasing: bool

    @property
    def sup_distances(self):
        return tuple(r.sup_distance for r in self.runs)

    @property
    def final_distance(self):
        return self.runs[-1].sup_distance


def _sum_norm(exp, theta):
    k = exp.counting.stride if exp.stride_adjusted else 1
    return (k / float(theta)) ** (1.0 / float(exp.alpha))


def transfer_sum_experiment(exp):
    """Tabulate per-theta sup distances of normalized random sums.

    For each theta: draw ``n`` normalized sums under the blocked-stream
    contract, then measure either the sup CF distance to the target CF on
    the grid (``target_kind='cf'``) or the KS distance to the target d.f
    (``target_kind='df'``).  The result records whether the distance
    column is strictly decreasing.
    """
    t_grid = np.asarray(exp.grid, dtype=float)
    runs = []
    for i, theta in enumerate(exp.thetas):
        family = _prepare_family(exp.counting, theta, exp.scale_rule)
        a = _sum_norm(exp, theta)

        def draw(rng, m, family=family, a=a):
            return random_sum_sample(family, exp.increments, a, 0.0, rng, m)

        x = blocked_draw(exp.seed, (exp.label, i), exp.n, draw, exp.workers)
        if exp.target_kind == "cf":
            emp = empirical_cf(x, t_grid)
            tgt = np.asarray(exp.target(t_grid))
            sup = float(np.abs(emp - tgt).max())
        elif exp.target_kind == "df":
            emp = empirical_df(x, t_grid)
            tgt = np.asarray(exp.target(t_grid), dtype=float)
            sup = ks_distance(x, exp.target)
        else:
            raise ValueError(f"unknown target kind {exp.target_kind!r}")
        runs.append(ThetaRun(float(theta), t_grid, emp, tgt, sup))
    sups = [r.sup_distance for r in runs]
    return TransferResult(tuple(runs),
                          all(a > b for a, b in zip(sups, sups[1:])))


def transfer_max_experiment(exp):
    """Tabulate per-theta sup d.f distances of normalized random maxima.

    ``exp.grid`` is a sequence of per-coordinate axes; the per-coordinate
    norming is ``a_i = (stride/theta)**(1/alpha_i)`` with ``alpha_i`` the
    Frechet shape of coordinate ``i``, and the sup runs over the full
    product grid against the target d.f.
    """
    axes = [np.asarray(a, dtype=float) for a in exp.grid]
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([g.ravel() for g in mesh], axis=-1)
    alphas = np.asarray(exp.alpha, dtype=float)
    tgt = np.asarray(exp.target(points), dtype=float)
    runs = []
    for i, theta in enumerate(exp.thetas):
        family = _prepare_family(exp.counting, theta, exp.scale_rule)
        k = family.stride if exp.stride_adjusted else 1
        a = (k / float(theta)) ** (1.0 / alphas)

        def draw(rng, m, family=family, a=a):
            return random_max_sample(family, exp.increments, a, 0.0, rng, m)

        v = blocked_draw(exp.seed, (exp.label, i), exp.n, draw, exp.workers)
        emp = empirical_df(v, points)
        sup = float(np.abs(emp - tgt).max())
        runs.append(ThetaRun(float(theta), points, emp, tgt, sup))
    sups = [r.sup_distance for r in runs]
    return TransferResult(tuple(runs),
                          all(a > b for a, b in zip(sups, sups[1:])))


@dataclass(frozen=True)
class NsReport:
    """Per-theta sup error of the normalized deficiency against psi."""

    thetas: tuple
    sup_errors: tuple
    t_grid: np.ndarray
    values: np.ndarray   # (len(thetas), len(grid)) deficiencies
    target: np.ndarray
    decreasing: bool


def ns_condition_check(g_family, thetas, t_grid, psi):
    """Tabulate ``sup_t |(1 - g_theta(t))/theta - psi(t)|`` along thetas.

    ``g_family(theta, t)`` is the counting-side CF family; convergence of
    the normalized deficiency to the stable exponent ``psi`` is the
    necessary-and-sufficient condition for the transfer limits.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    target = np.asarray(psi(t_grid))
    values = np.empty((len(thetas), len(t_grid)), dtype=complex)
    sups = []
    for i, theta in enumerate(thetas):
        g = np.asarray(g_family(float(theta), t_grid))
        values[i] = (1.0 - g) / float(theta)
        sups.append(float(np.abs(values[i] - target).max()))
    decreasing = all(a > b for a, b in zip(sups, sups[1:]))
    return NsReport(tuple(float(t) for t in thetas), tuple(sups),
                    t_grid, values, target, decreasing)
