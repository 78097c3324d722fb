"""Experiment drivers: validated configs in, Report objects out.

Each runner builds its domain objects from a validated config dict, draws
any Monte-Carlo samples under the blocked-stream determinism contract,
tabulates comparison rows in the fixed schema, and attaches named
threshold checks.  The CLI layer only parses flags, calls
:func:`run_experiment`, writes the CSV, and maps the outcome to an exit
code.
"""

from __future__ import annotations

import numpy as np

from . import fixtures
from .classl import classl_factor_check, selfdecomp_cf_check
from .config import ConfigError, build_mixing
from .empirical import (blocked_draw, empirical_cf, empirical_df,
                        ks_distance, two_sample_ks, two_sample_ks_critical)
from .limits import (RandomLimitExperiment, ns_condition_check,
                     transfer_max_experiment, transfer_sum_experiment)
from .mid import (MidLaw, mid_power_check, mid_power_sample, mixture_mid_df,
                  sample_extremal_at_random_time, support_rectangle_check)
from .mixtures import linnik_cf, sample_mixture_id
from .pgf import PgfFamily, check_lemma22_limit, pgf_pmf, pgf_sample
from .reporting import Check, Report
from .stable import StableExponent, sample_strictly_stable, stable_cf_exponent
from .subordinate import SubordinatedSpec, sample_subordinated_path, \
    subordinated_cf

__all__ = ["KIND_CODE", "run_experiment"]

# Integer stream labels per experiment kind; part of the determinism
# contract, never reorder.
KIND_CODE = {
    "pgf": 1,
    "lemma22": 2,
    "converge-sum": 3,
    "converge-max": 4,
    "mid-check": 5,
    "subordinate": 6,
    "classl": 7,
    "ns-check": 8,
    "mid-sample": 9,
}


def _build_counting(table, theta=1.0):
    mixing = build_mixing(table["mixing"], "counting.mixing")
    try:
        return PgfFamily(mixing, float(theta), table["shift"],
                         table["stride"])
    except ValueError as exc:
        raise ConfigError(f"counting: {exc}") from exc


def _build_exponent(table, path="id"):
    try:
        return StableExponent(table["lambda"], table["alpha"], table["beta"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _linspace(grid):
    return np.linspace(grid["lo"], grid["hi"], grid["points"])


def _axis(grid):
    if grid.get("log", False):
        if grid["lo"] <= 0.0:
            raise ConfigError("log grid needs lo > 0")
        return np.geomspace(grid["lo"], grid["hi"], grid["points"])
    return np.linspace(grid["lo"], grid["hi"], grid["points"])


# ----------------------------------------------------------------------
# pgf
# ----------------------------------------------------------------------

def _run_pgf(cfg, seed, n, workers, report):
    counting = cfg["counting"]
    family = _build_counting(counting, counting["theta"])
    support, probs, tail = pgf_pmf(family, cfg["m_max"])
    if tail > 1e-9:
        raise ConfigError(
            f"m_max = {cfg['m_max']} leaves pmf tail {tail:.2e};"
            " increase m_max")
    draws = blocked_draw(
        seed, (KIND_CODE["pgf"], 0), n,
        lambda rng, m: pgf_sample(family, rng, m), workers)
    index = (draws - family.shift) // family.stride
    counts = np.bincount(index, minlength=len(support))[:len(support)]
    freq = counts / n
    sigma = np.sqrt(probs * (1.0 - probs) / n)
    z = np.abs(freq - probs) / np.where(sigma > 0, sigma, 1.0)
    sup = float(np.abs(freq - probs).max())
    report.add_rows(family.theta, support.astype(float), freq, probs, sup)
    sigmas = cfg["thresholds"]["sigmas"]
    report.checks.append(Check(
        f"pmf_within_{sigmas:g}_sigma", bool(np.all(z <= sigmas)),
        f"worst z = {float(z.max()):.3f}"))


# ----------------------------------------------------------------------
# lemma22
# ----------------------------------------------------------------------

def _run_lemma22(cfg, seed, n, workers, report):
    family = _build_counting(cfg["counting"])
    v_grid = _linspace(cfg["grid"])
    if cfg["grid"]["lo"] < 0.0:
        raise ConfigError("lemma22 grid needs lo >= 0")
    result = check_lemma22_limit(family, cfg["theta"], v_grid)
    for i, theta in enumerate(result.thetas):
        report.add_rows(theta, v_grid, result.values[i], result.target,
                        result.sup_errors[i])
    thr = cfg["thresholds"]
    report.checks.append(Check(
        "final_sup_error", result.sup_errors[-1] < thr["final"],
        f"{result.sup_errors[-1]:.3e} vs {thr['final']:.3e}"))
    if thr["decreasing"]:
        report.checks.append(Check(
            "sup_error_decreasing", result.decreasing,
            " > ".join(f"{s:.3e}" for s in result.sup_errors)))


# ----------------------------------------------------------------------
# converge-sum
# ----------------------------------------------------------------------

def _sum_increments(table):
    kind = table["kind"]
    if kind == "exponential":
        scale = table["scale"]
        return lambda rng, m: rng.exponential(scale, m)
    if kind == "cauchy":
        exponent = StableExponent(table["scale"], 1.0, 0.0)
    elif kind == "gaussian":
        exponent = StableExponent(table["lambda"], 2.0, 0.0)
    else:
        if table["alpha"] is None:
            raise ConfigError("increments: stable kind needs 'alpha'")
        exponent = _build_exponent(table, "increments")
    return lambda rng, m: sample_strictly_stable(exponent, rng, m)


def _sum_target(table):
    kind = table["kind"]
    if kind == "exponential-df":
        scale = table["scale"]

        def df(x):
            x = np.asarray(x, dtype=float)
            return np.where(x < 0.0, 0.0, 1.0 - np.exp(-x / scale))

        return df, "df"
    if table["alpha"] is None:
        raise ConfigError(f"target: {kind} kind needs 'alpha'")
    if kind == "linnik":
        lam, alpha = table["lambda"], table["alpha"]
        beta, nu = table["beta"], table["nu"]
        return (lambda t: linnik_cf(lam, alpha, beta, nu, t)), "cf"
    exponent = _build_exponent(table, "target")
    return (lambda t: np.exp(-stable_cf_exponent(exponent, t))), "cf"


def _run_converge_sum(cfg, seed, n, workers, report):
    counting = _build_counting(cfg["counting"])
    increments = _sum_increments(cfg["increments"])
    target, target_kind = _sum_target(cfg["target"])
    experiment = RandomLimitExperiment(
        counting=counting, thetas=tuple(cfg["theta"]),
        increments=increments, target=target,
        alpha=cfg["norming"]["alpha"], n=n, grid=_linspace(cfg["grid"]),
        seed=seed, workers=workers, label=KIND_CODE["converge-sum"],
        target_kind=target_kind, scale_rule=cfg["counting"]["scale_rule"],
        stride_adjusted=cfg["norming"]["stride_adjusted"])
    result = transfer_sum_experiment(experiment)
    for run in result.runs:
        report.add_rows(run.theta, run.grid_points, run.empirical,
                        run.target, run.sup_distance)
    thr = cfg["thresholds"]
    sups = result.sup_distances
    if target_kind == "df":
        worst = max(sups)
        report.checks.append(Check(
            "ks_at_every_theta", worst < thr["ks"],
            f"worst KS = {worst:.4f} vs {thr['ks']:.4f}"))
    else:
        report.checks.append(Check(
            "final_sup_distance", result.final_distance < thr["final"],
            f"{result.final_distance:.4f} vs {thr['final']:.4f}"))
        if thr["decreasing"]:
            report.checks.append(Check(
                "distance_decreasing", result.decreasing,
                " > ".join(f"{s:.4f}" for s in sups)))


# ----------------------------------------------------------------------
# converge-max
# ----------------------------------------------------------------------

def _run_converge_max(cfg, seed, n, workers, report):
    counting = _build_counting(cfg["counting"])
    shapes = tuple(cfg["increments"]["gamma"])
    law = MidLaw("product-frechet", shapes=shapes)
    mixing = build_mixing(cfg["target"]["mixing"], "target.mixing")

    def vectors(rng, m):
        return mid_power_sample(law, 1.0, rng, m)

    def target(points):
        return mixture_mid_df(mixing, law, points)

    axis = _axis(cfg["grid"])
    experiment = RandomLimitExperiment(
        counting=counting, thetas=tuple(cfg["theta"]), increments=vectors,
        target=target, alpha=shapes, n=n, grid=[axis] * len(shapes),
        seed=seed, workers=workers, label=KIND_CODE["converge-max"],
        scale_rule=cfg["counting"]["scale_rule"],
        stride_adjusted=cfg["norming"]["stride_adjusted"])
    result = transfer_max_experiment(experiment)
    for run in result.runs:
        points = [tuple(p) for p in run.grid_points]
        report.add_rows(run.theta, points, run.empirical, run.target,
                        run.sup_distance)
    thr = cfg["thresholds"]
    report.checks.append(Check(
        "final_sup_distance", result.final_distance < thr["final"],
        f"{result.final_distance:.4f} vs {thr['final']:.4f}"))
    if thr["decreasing"]:
        report.checks.append(Check(
            "distance_decreasing", result.decreasing,
            " > ".join(f"{s:.4f}" for s in result.sup_distances)))


# ----------------------------------------------------------------------
# mid-check and mid-sample
# ----------------------------------------------------------------------

_FIXTURE_DFS = {
    "l-shaped-fixture": fixtures.lshaped_df,
    "nqd-fixture": fixtures.nqd_lattice_df,
}

_MAX_VIOLATION_ROWS = 50


def _mid_subject(entry, grid):
    kind = entry["kind"]
    if kind == "product-frechet":
        law = MidLaw("product-frechet", shapes=tuple(entry["gamma"]))
        default_axis = np.concatenate(([-1.0, 0.0], _axis(grid)))
    elif kind == "product-exponential":
        law = MidLaw("product-exponential",
                     shapes=(1.0,) * len(entry["gamma"]))
        default_axis = np.linspace(-3.0, 1.0, 9)
    else:
        law = _FIXTURE_DFS[kind]
        default_axis = np.array([-0.5, 0.0, 0.5, 1.0, 1.5])
    axis = np.asarray(entry["axis"], dtype=float) \
        if entry["axis"] else default_axis
    dim = len(entry["gamma"]) if not callable(law) else 2
    return law, [axis] * dim


def _run_mid_check(cfg, seed, n, workers, report):
    for i, entry in enumerate(cfg["laws"]):
        law, axes = _mid_subject(entry, cfg["grid"])
        power = mid_power_check(law, axes, powers=tuple(cfg["powers"]))
        support = support_rectangle_check(law, axes)
        valid = power.passed and support.passed
        expected = entry["expect"]
        ok = valid if expected == "pass" else not valid
        shown = 0
        for v in power.violations:
            if shown >= _MAX_VIOLATION_ROWS:
                break
            report.add_rows(float(i),
                            [f"power={v.power:g}:{v.check}@" +
                             ";".join(f"{c:g}" for c in v.point)],
                            [v.value], [0.0], abs(v.value))
            shown += 1
        for point in support.violations[:_MAX_VIOLATION_ROWS]:
            report.add_rows(float(i),
                            ["support@" + ";".join(f"{c:g}" for c in point)],
                            [1.0], [0.0], 1.0)
        report.add_rows(float(i), [f"{entry['kind']}:violations"],
                        [float(len(power.violations)
                               + len(support.violations))], [0.0], 0.0)
        detail = (f"power {'pass' if power.passed else 'FAIL'}, support "
                  f"{'pass' if support.passed else 'FAIL'}, "
                  f"expected {expected}")
        report.checks.append(Check(
            f"law{i}_{entry['kind']}", ok, detail))


def _run_mid_sample(cfg, seed, n, workers, report):
    scfg = cfg["sample"]
    if scfg is None:
        raise ConfigError("mid --sample needs a [sample] table")
    mixing = build_mixing(scfg["mixing"], "sample.mixing")
    law = MidLaw("product-frechet", shapes=tuple(scfg["gamma"]))
    draws = blocked_draw(
        seed, (KIND_CODE["mid-sample"], 0), n,
        lambda rng, m: sample_extremal_at_random_time(mixing, law, rng, m),
        workers)
    axis = _axis(scfg["grid"])
    mesh = np.meshgrid(*([axis] * law.dimension), indexing="ij")
    points = np.stack([g.ravel() for g in mesh], axis=-1)
    emp = empirical_df(draws, points)
    tgt = mixture_mid_df(mixing, law, points)
    sup = float(np.abs(emp - tgt).max())
    report.add_rows(0.0, [tuple(p) for p in points], emp, tgt, sup)
    thr = scfg["thresholds"]
    report.checks.append(Check(
        "df_sup_distance", sup < thr["final"],
        f"{sup:.4f} vs {thr['final']:.4f}"))
    if scfg["spot"]:
        spot = np.asarray(scfg["spot"], dtype=float)
        if len(spot) != law.dimension:
            raise ConfigError("sample.spot dimension mismatch")
        emp_spot = empirical_df(draws, spot)
        tgt_spot = float(mixture_mid_df(mixing, law, spot))
        err = abs(emp_spot - tgt_spot)
        report.checks.append(Check(
            "spot_value", err < thr["spot"],
            f"edf{tuple(float(v) for v in spot)} = {emp_spot:.4f}, "
            f"target {tgt_spot:.4f}"))


# ----------------------------------------------------------------------
# subordinate
# ----------------------------------------------------------------------

def _run_subordinate(cfg, seed, n, workers, report):
    exponent = _build_exponent(cfg["id"])
    directing = build_mixing(cfg["directing"], "directing")
    try:
        spec = SubordinatedSpec(exponent, directing, tuple(cfg["times"]))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if exponent.alpha == 1.0 and exponent.beta != 0.0:
        raise ConfigError("cannot sample paths of skewed 1-stable laws")
    paths = blocked_draw(
        seed, (KIND_CODE["subordinate"], 0), n,
        lambda rng, m: sample_subordinated_path(spec, rng, m), workers)
    t_grid = _linspace(cfg["grid"])
    thr = cfg["thresholds"]
    cf_tol = thr["cf"] if thr["cf"] is not None else 3.0 / np.sqrt(n) + 0.005
    for i, t_time in enumerate(spec.times):
        emp = empirical_cf(paths[:, i], t_grid)
        tgt = subordinated_cf(spec, t_time, t_grid)
        sup = float(np.abs(emp - tgt).max())
        report.add_rows(t_time, t_grid, emp, tgt, sup)
        report.checks.append(Check(
            f"cf_match_t={t_time:g}", sup < cf_tol,
            f"{sup:.4f} vs {cf_tol:.4f}"))
    needs_endpoint = thr["two_sample"] or thr["ks_target"] is not None
    if needs_endpoint and 1.0 not in spec.times:
        raise ConfigError("endpoint checks need 1.0 in the time grid")
    if needs_endpoint:
        endpoint = paths[:, spec.times.index(1.0)]
    if thr["two_sample"]:
        direct = blocked_draw(
            seed, (KIND_CODE["subordinate"], 1), n,
            lambda rng, m: sample_mixture_id(directing, exponent, rng, m),
            workers)
        stat = two_sample_ks(endpoint, direct)
        critical = two_sample_ks_critical(n, n, thr["two_sample_level"])
        report.checks.append(Check(
            "two_sample_ks_t=1", stat < critical,
            f"{stat:.4f} vs {critical:.4f} at level "
            f"{thr['two_sample_level']:g}"))
    if thr["ks_target"] is not None:
        if thr["ks_target"] == "laplace":
            scale = np.sqrt(exponent.lam)

            def df(x):
                x = np.asarray(x, dtype=float)
                return np.where(x < 0.0, 0.5 * np.exp(x / scale),
                                1.0 - 0.5 * np.exp(-x / scale))
        else:
            def df(x):
                x = np.asarray(x, dtype=float)
                return np.where(x < 0.0, 0.0, 1.0 - np.exp(-x))

        stat = ks_distance(endpoint, df)
        report.checks.append(Check(
            f"ks_vs_{thr['ks_target']}_t=1", stat < thr["ks"],
            f"{stat:.4f} vs {thr['ks']:.4f}"))


# ----------------------------------------------------------------------
# classl
# ----------------------------------------------------------------------

def _classl_lt_subject(entry):
    kind = entry["kind"]
    if kind == "gamma":
        return build_mixing({"kind": "gamma", "shape": entry["shape"],
                             "scale": entry["scale"], "point": None},
                            "subject")
    if kind == "exponential":
        return build_mixing({"kind": "exponential", "shape": None,
                             "scale": entry["scale"], "point": None},
                            "subject")
    if kind == "degenerate":
        return build_mixing({"kind": "degenerate", "shape": None,
                             "scale": None, "point": entry["point"]},
                            "subject")
    return fixtures.bernoulli_lt


def _classl_cf_subject(entry):
    kind = entry["kind"]
    if kind == "linnik":
        lam, alpha = entry["lambda"], entry["alpha"]
        beta, nu = entry["beta"], entry["nu"]
        StableExponent(lam, alpha, beta)    # parameter validation
        return lambda t: linnik_cf(lam, alpha, beta, nu, t)
    if kind == "gaussian":
        lam = entry["lambda"]
        return lambda t: np.exp(-lam * np.asarray(t, dtype=float) ** 2) \
            + 0j
    return fixtures.uniform_cf


_LT_SUBJECTS = ("gamma", "exponential", "degenerate", "bernoulli-fixture")


def _run_classl(cfg, seed, n, workers, report):
    c_grid = cfg["c_grid"]
    if any(not 0.0 < c < 1.0 for c in c_grid):
        raise ConfigError("c_grid values must lie in (0, 1)")
    s_grid = np.linspace(0.0, cfg["factor_grid"]["s_max"],
                         cfg["factor_grid"]["anchors"])
    t_grid = np.linspace(-cfg["cf_grid"]["t_max"], cfg["cf_grid"]["t_max"],
                         cfg["cf_grid"]["points"])
    for i, entry in enumerate(cfg["subjects"]):
        kind = entry["kind"]
        if kind in _LT_SUBJECTS:
            subject = _classl_lt_subject(entry)
            try:
                result = classl_factor_check(subject, c_grid, s_grid)
            except ValueError as exc:
                raise ConfigError(f"subjects[{i}]: {exc}") from exc
            for e in result.entries:
                worst = min(e.worst_value, 0.0)
                report.add_rows(e.c, [f"{kind}:factor_cm"], [e.worst_value],
                                [0.0], abs(worst))
            detail = "; ".join(
                f"c={e.c:g} orders={list(e.violating_orders)}"
                for e in result.entries if not e.passed) or "factor CM clean"
        else:
            subject = _classl_cf_subject(entry)
            result = selfdecomp_cf_check(subject, c_grid, t_grid)
            for e in result.entries:
                report.add_rows(e.c, [f"{kind}:cf_psd"],
                                [e.min_eigenvalue], [0.0],
                                max(0.0, e.max_modulus - 1.0))
            detail = "; ".join(
                f"c={e.c:g} min_eig={e.min_eigenvalue:.2e}"
                f" max_mod={e.max_modulus:.2f}"
                + (" zero-division" if e.zero_division else "")
                for e in result.entries if not e.passed) or "CF factors clean"
        ok = result.passed if entry["expect"] == "pass" else not result.passed
        report.checks.append(Check(
            f"subject{i}_{kind}_expected_{entry['expect']}", ok, detail))


# ----------------------------------------------------------------------
# ns-check
# ----------------------------------------------------------------------

def _run_ns_check(cfg, seed, n, workers, report):
    exponent = _build_exponent(cfg["id"])

    def g_family(theta, t):
        return np.exp(-theta * stable_cf_exponent(exponent, t))

    def psi(t):
        return stable_cf_exponent(exponent, t)

    result = ns_condition_check(g_family, cfg["theta"],
                                _linspace(cfg["grid"]), psi)
    for i, theta in enumerate(result.thetas):
        report.add_rows(theta, result.t_grid, result.values[i],
                        result.target, result.sup_errors[i])
    thr = cfg["thresholds"]
    report.checks.append(Check(
        "final_sup_error", result.sup_errors[-1] < thr["final"],
        f"{result.sup_errors[-1]:.3e} vs {thr['final']:.3e}"))
    if thr["decreasing"]:
        report.checks.append(Check(
            "sup_error_decreasing", result.decreasing,
            " > ".join(f"{s:.3e}" for s in result.sup_errors)))


_RUNNERS = {
    "pgf": _run_pgf,
    "lemma22": _run_lemma22,
    "converge-sum": _run_converge_sum,
    "converge-max": _run_converge_max,
    "subordinate": _run_subordinate,
    "classl": _run_classl,
    "ns-check": _run_ns_check,
}


def run_experiment(cfg, config_text="", mode=None, seed=None, samples=None,
                   workers=1):
    """Run the experiment described by a validated config.

    Parameters
    ----------
    cfg : dict
        Output of :func:`phimix.config.validate_config`.
    config_text : str
        Raw config text echoed into the report header.
    mode : str, optional
        ``'check'`` or ``'sample'`` for the mid-check kind.
    seed, samples : optional
        Override the config values (CLI flags win).
    workers : int
        Thread count; never changes results.

    Returns
    -------
    Report
    """
    kind = cfg["kind"]
    seed = cfg["seed"] if seed is None else int(seed)
    n = cfg["samples"] if samples is None else int(samples)
    if n < 1:
        raise ConfigError("samples must be positive")
    report = Report(kind=kind, seed=seed, samples=n,
                    config_text=config_text)
    if kind == "mid-check":
        if mode not in (None, "check", "sample"):
            raise ConfigError(f"unknown mid mode {mode!r}")
        if mode == "sample":
            _run_mid_sample(cfg, seed, n, workers, report)
        else:
            _run_mid_check(cfg, seed, n, workers, report)
    else:
        _RUNNERS[kind](cfg, seed, n, workers, report)
    return report
