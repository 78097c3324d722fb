# Max-infinitely divisible d.f's H admit every positive power H^s as a
# d.f, so randomizing the power by a positive law with LT phi gives the
# mixture d.f phi(-log H(x)).  For the product-Frechet H(x, y) =
# exp(-1/x - 1/y) and exponential mixing the mixture has the closed form
#   F(x, y) = 1 / (1 + 1/x + 1/y),
# and the exact sampler takes the coordinatewise max of a Poisson-free
# trick: draw Z from the mixer, then one vector from H^Z.  A random-max
# transfer theorem produces the same limit from geometric maxima.

import numpy as np

from phimix import (MidLaw, MixingLaw, PgfFamily, RandomLimitExperiment,
                    empirical_df, mid_power_sample, mixture_mid_df,
                    sample_extremal_at_random_time, spawn_rng,
                    transfer_max_experiment)

n = 20_000
rng = spawn_rng(1004)
law = MidLaw("product-frechet", shapes=(1.0, 1.0))
mixing = MixingLaw.exponential(1.0)

draws = sample_extremal_at_random_time(mixing, law, rng, n)
print("exponential-mixed product-Frechet, n =", n)
print("   (x, y)      empirical   1/(1 + 1/x + 1/y)")
for x, y in ((1.0, 1.0), (2.0, 2.0), (1.0, 4.0), (5.0, 5.0)):
    point = np.array([x, y])
    emp = empirical_df(draws, point)
    tgt = mixture_mid_df(mixing, law, point)
    print(f"  ({x:3.1f},{y:4.1f})   {float(emp):9.4f}   {float(tgt):9.4f}")

# geometric maxima of Frechet vectors, normed by theta, converge to the
# same mixture d.f
axis = np.geomspace(0.5, 8.0, 5)
experiment = RandomLimitExperiment(
    counting=PgfFamily(MixingLaw.exponential(1.0), theta=1.0),
    thetas=(0.1, 0.01),
    increments=lambda r, m: mid_power_sample(law, 1.0, r, m),
    target=lambda pts: mixture_mid_df(mixing, law, pts),
    alpha=(1.0, 1.0), n=20_000, grid=[axis, axis], seed=1005, label=0)
result = transfer_max_experiment(experiment)
print("\ngeometric maxima vs the mixture d.f:")
for run in result.runs:
    print(f"  theta = {run.theta:6.3f}   sup d.f distance = "
          f"{run.sup_distance:.4f}")
