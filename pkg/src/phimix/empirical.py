"""Shared empirical machinery: seeded samples, CF/DF estimates, distances.

Sampling follows a single project-wide determinism contract.  Every sample
is drawn in fixed blocks of :data:`BLOCK` variates; block ``b`` of a sample
keyed by ``(seed, key)`` uses the child generator spawned from
``SeedSequence(seed, spawn_key=key + (b,))``.  Blocks are concatenated in
index order, so results are byte-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BLOCK",
    "spawn_rng",
    "blocked_draw",
    "EmpiricalSample",
    "make_sample",
    "empirical_cf",
    "empirical_df",
    "ks_distance",
    "two_sample_ks",
    "two_sample_ks_critical",
    "cf_sup_distance",
    "PsdReport",
    "psd_toeplitz_check",
]

BLOCK = 4096

# x-chunk length used when accumulating empirical CFs, bounds peak memory
_CF_CHUNK = 1 << 15


def spawn_rng(seed, *key):
    """Child generator for integer stream key ``key`` under ``seed``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)


def blocked_draw(seed, key, n, draw, workers=1):
    """Draw ``n`` variates in fixed blocks with per-block child generators.

    Parameters
    ----------
    seed : int
        Base seed.
    key : tuple of int
        Stream key; block index is appended per block.
    n : int
        Total number of variates.
    draw : callable
        ``draw(rng, m) -> array`` whose leading axis has length ``m``.
    workers : int
        Thread count; the result does not depend on it.

    Returns
    -------
    ndarray
        Blocks concatenated along axis 0, length ``n``.
    """
    n = int(n)
    if n < 1:
        raise ValueError("need n >= 1")
    key = tuple(int(k) for k in key)
    nblocks = (n + BLOCK - 1) // BLOCK
    sizes = [BLOCK] * nblocks
    sizes[-1] = n - BLOCK * (nblocks - 1)

    def one(b):
        return np.asarray(draw(spawn_rng(seed, *key, b), sizes[b]))

    if workers <= 1 or nblocks == 1:
        parts = [one(b) for b in range(nblocks)]
    else:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            parts = list(pool.map(one, range(nblocks)))
    return np.concatenate(parts, axis=0)


@dataclass(frozen=True)
class EmpiricalSample:
    """A seeded Monte-Carlo sample with its generating metadata.

    Regeneration from the same ``(seed, key, n)`` and draw routine is
    bit-identical; ``metadata`` carries a human-readable spec string.
    """

    values: np.ndarray
    seed: int
    n: int
    key: tuple = ()
    metadata: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1 or len(self.values) != self.n:
            raise ValueError("n must match the number of values")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sample contains non-finite values")


def make_sample(seed, key, n, draw, workers=1, metadata=""):
    """Draw an :class:`EmpiricalSample` under the blocked-stream contract."""
    values = blocked_draw(seed, key, n, draw, workers)
    return EmpiricalSample(values, int(seed), int(n), tuple(key), metadata)


def _values(sample):
    if isinstance(sample, EmpiricalSample):
        return sample.values
    return np.asarray(sample)


def empirical_cf(sample, t):
    """Empirical CF ``mean(exp(1j*t*x))``; exactly 1 at ``t = 0``."""
    x = _values(sample)
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    tt = np.atleast_1d(t)
    acc = np.zeros(tt.shape, dtype=complex)
    for lo in range(0, len(x), _CF_CHUNK):
        chunk = x[lo:lo + _CF_CHUNK]
        acc += np.exp(1j * tt[:, None] * chunk[None, :]).sum(axis=1)
    out = acc / len(x)
    out[tt == 0.0] = 1.0
    return complex(out[0]) if scalar else out


def empirical_df(sample, x):
    """Fraction of sample points ``<= x`` (component-wise for vectors).

    For scalar samples ``x`` may be a scalar or an array of evaluation
    points.  For vector samples of shape ``(n, d)``, ``x`` is a point of
    shape ``(d,)`` or a stack of points ``(m, d)``.
    """
    v = _values(sample)
    if v.ndim == 1:
        xs = np.sort(v)
        x = np.asarray(x, dtype=float)
        out = np.searchsorted(xs, x, side="right") / len(xs)
        return float(out) if out.ndim == 0 else out
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    pts = np.atleast_2d(x)
    out = np.all(v[None, :, :] <= pts[:, None, :], axis=2).mean(axis=1)
    return float(out[0]) if single else out


def ks_distance(sample, cdf):
    """Two-sided Kolmogorov-Smirnov distance of a scalar sample to ``cdf``."""
    xs = np.sort(_values(sample))
    n = len(xs)
    f = np.asarray(cdf(xs), dtype=float)
    i = np.arange(1, n + 1)
    return float(max((i / n - f).max(), (f - (i - 1) / n).max()))


def two_sample_ks(a, b):
    """Two-sample KS statistic between scalar samples ``a`` and ``b``."""
    a = np.sort(_values(a))
    b = np.sort(_values(b))
    both = np.concatenate((a, b))
    fa = np.searchsorted(a, both, side="right") / len(a)
    fb = np.searchsorted(b, both, side="right") / len(b)
    return float(np.abs(fa - fb).max())


def two_sample_ks_critical(n, m, level=0.01):
    """Asymptotic two-sample KS critical value at the given level."""
    coeff = {0.10: 1.224, 0.05: 1.358, 0.01: 1.628}.get(round(level, 2))
    if coeff is None:
        raise ValueError("supported levels: 0.10, 0.05, 0.01")
    return coeff * np.sqrt((n + m) / (n * m))


def cf_sup_distance(sample, cf, t_grid):
    """Largest gap between the empirical CF and ``cf`` over ``t_grid``."""
    t_grid = np.asarray(t_grid, dtype=float)
    ecf = empirical_cf(sample, t_grid)
    return float(np.abs(ecf - np.asarray(cf(t_grid))).max())


@dataclass(frozen=True)
class PsdReport:
    """Outcome of :func:`psd_toeplitz_check`."""

    passed: bool
    min_eigenvalue: float
    hermitian_defect: float
    finite: bool


def psd_toeplitz_check(f, t_points, tol=1e-8):
    """Positive-semidefiniteness witness for a candidate CF on a grid.

    Forms the matrix ``[f(t_i - t_j)]`` for at most 64 points, reports its
    smallest eigenvalue (of the Hermitian average) and the Hermitian defect
    ``max |f(-t) - conj(f(t))|``.  Pass requires a finite matrix, defect at
    most ``tol``, and minimum eigenvalue at least ``-tol``.
    """
    t = np.asarray(t_points, dtype=float)
    if t.ndim != 1 or len(t) > 64:
        raise ValueError("need a 1-d grid of at most 64 points")
    diff = t[:, None] - t[None, :]
    m = np.asarray(f(diff.ravel()), dtype=complex).reshape(diff.shape)
    finite = bool(np.all(np.isfinite(m)))
    if not finite:
        return PsdReport(False, float("nan"), float("nan"), False)
    defect = float(np.abs(m - m.conj().T).max())
    eig = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    min_eig = float(eig[0])
    passed = defect <= tol and min_eig >= -tol
    return PsdReport(passed, min_eig, defect, True)
