"""phimix: power mixtures of ID and max-ID laws, verified numerically.

The package constructs characteristic functions ``phi(psi)`` and
distribution functions ``phi(-log H)`` obtained by randomizing the power
parameter of a stable CF or a max-infinitely divisible d.f by a positive
law with Laplace transform ``phi``, samples them exactly, and ships the
Monte-Carlo and finite-difference machinery that verifies every identity:
counting families with PGF ``s**j * phi((1 - s**k)/theta)``, random-sum
and random-max transfer experiments, subordinated path sampling,
self-decomposability screens, and max-infinite-divisibility checks.
"""

from .classl import (classl_factor_check, construct_classl_mixture,
                     selfdecomp_cf_check, selfdecomp_factor,
                     unimodality_probe)
from .config import ConfigError, load_config, validate_config
from .empirical import (BLOCK, EmpiricalSample, blocked_draw, cf_sup_distance,
                        empirical_cf, empirical_df, ks_distance, make_sample,
                        psd_toeplitz_check, spawn_rng, two_sample_ks,
                        two_sample_ks_critical)
from .experiments import run_experiment
from .limits import (RandomLimitExperiment, attraction_norming,
                     ns_condition_check, random_max_sample, random_sum_sample,
                     transfer_max_experiment, transfer_sum_experiment)
from .mid import (MidLaw, mid_df_eval, mid_power_check, mid_power_sample,
                  mixture_mid_df, sample_extremal_at_random_time,
                  support_rectangle_check)
from .mixing import (CmReport, MixingLaw, check_complete_monotonicity,
                     lt_eval, sample_mixing)
from .mixtures import linnik_cf, mixture_cf, sample_mixture_id
from .pgf import (PgfFamily, check_lemma22_limit, pgf_eval, pgf_pmf,
                  pgf_sample, scaled_lt)
from .stable import (StableExponent, max_skew, sample_strictly_stable,
                     stable_cf, stable_cf_exponent)
from .subordinate import (SubordinatedSpec, directing_lt,
                          sample_subordinated_path, subordinated_cf)

__version__ = "0.1.0"

__all__ = [
    "BLOCK",
    "CmReport",
    "ConfigError",
    "EmpiricalSample",
    "MidLaw",
    "MixingLaw",
    "PgfFamily",
    "RandomLimitExperiment",
    "StableExponent",
    "SubordinatedSpec",
    "attraction_norming",
    "blocked_draw",
    "cf_sup_distance",
    "check_complete_monotonicity",
    "check_lemma22_limit",
    "classl_factor_check",
    "construct_classl_mixture",
    "directing_lt",
    "empirical_cf",
    "empirical_df",
    "ks_distance",
    "linnik_cf",
    "load_config",
    "lt_eval",
    "make_sample",
    "max_skew",
    "mid_df_eval",
    "mid_power_check",
    "mid_power_sample",
    "mixture_cf",
    "mixture_mid_df",
    "ns_condition_check",
    "pgf_eval",
    "pgf_pmf",
    "pgf_sample",
    "psd_toeplitz_check",
    "random_max_sample",
    "random_sum_sample",
    "run_experiment",
    "sample_extremal_at_random_time",
    "sample_mixing",
    "sample_mixture_id",
    "sample_strictly_stable",
    "sample_subordinated_path",
    "scaled_lt",
    "selfdecomp_cf_check",
    "selfdecomp_factor",
    "spawn_rng",
    "stable_cf",
    "stable_cf_exponent",
    "subordinated_cf",
    "support_rectangle_check",
    "transfer_max_experiment",
    "transfer_sum_experiment",
    "two_sample_ks",
    "two_sample_ks_critical",
    "unimodality_probe",
    "validate_config",
]
