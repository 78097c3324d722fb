# Random-sum transfer: if the scaled count theta*N converges in law to a
# positive Z (equivalently the scaled LT of N converges to the LT phi of
# Z), then sums of n^(-1/alpha)-normalized strictly stable increments
# stopped at N converge to the power mixture with CF phi(psi(t)).  With
# geometric counts and Cauchy increments the limit is the Linnik law
# 1/(1 + |t|).  Three stages of that pipeline, at desk scale:
#   1. the scaled-count LT limit (deterministic, no sampling)
#   2. the rate condition sup_t |(1 - g_theta(t))/theta - psi(t)| -> 0
#   3. the Monte-Carlo random-sum experiment itself

import numpy as np

from phimix import (MixingLaw, PgfFamily, RandomLimitExperiment,
                    StableExponent, check_lemma22_limit, linnik_cf,
                    ns_condition_check, sample_strictly_stable,
                    stable_cf_exponent, transfer_sum_experiment)

thetas = (0.1, 0.01, 0.001)
family = PgfFamily(MixingLaw.exponential(1.0), theta=1.0)

# 1. the LT of theta*N approaches phi itself
v_grid = np.linspace(0.1, 5.0, 25)
result = check_lemma22_limit(family, thetas, v_grid)
print("scaled-count LT limit, sup_v |E e^{-v*theta*N} - phi(v)|:")
for theta, sup in zip(result.thetas, result.sup_errors):
    print(f"  theta = {theta:6.3f}   sup error = {sup:.2e}")

# 2. the normalized deficiency of g_theta(t) = e^{-theta|t|} against |t|
psi = lambda t: np.abs(np.asarray(t, dtype=float))
ns = ns_condition_check(lambda theta, t: np.exp(-theta * psi(t)),
                        (0.1, 0.01), np.linspace(-1.0, 1.0, 41), psi)
print("\nrate condition for g_theta = e^{-theta|t|}:")
for theta, sup in zip(ns.thetas, ns.sup_errors):
    print(f"  theta = {theta:6.3f}   sup error = {sup:.2e}")

# 3. geometric-stopped Cauchy sums against the Linnik CF
cauchy = StableExponent(1.0, 1.0)
experiment = RandomLimitExperiment(
    counting=family, thetas=thetas,
    increments=lambda rng, m: sample_strictly_stable(cauchy, rng, m),
    target=lambda t: linnik_cf(1.0, 1.0, 0.0, 1.0, t),
    alpha=1.0, n=20_000, grid=np.linspace(-5.0, 5.0, 41),
    seed=1003, label=0)
result = transfer_sum_experiment(experiment)
print("\ngeometric Cauchy sums vs the Linnik CF 1/(1+|t|):")
for run in result.runs:
    print(f"  theta = {run.theta:6.3f}   sup CF distance = "
          f"{run.sup_distance:.4f}")
print("decreasing along theta:", result.decreasing)
