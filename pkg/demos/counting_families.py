# Counting families with PGF P(s) = s^j * phi((1 - s^k)/theta), where phi
# is the Laplace transform of a positive mixing law.  The counts are
# sampled as N = j + k * Poisson(Z/theta) with Z from the mixer, so the
# family is a mixed Poisson on the lattice j + k*N0:
#   * exponential mixing  -> geometric counts
#   * gamma(nu) mixing    -> negative binomial counts
#   * degenerate mixing   -> plain Poisson counts
# The pmf comes from differentiating the PGF; simulation must agree.

import numpy as np

from phimix import MixingLaw, PgfFamily, pgf_eval, pgf_pmf, pgf_sample, spawn_rng

n = 50_000
rng = spawn_rng(1002)

families = (
    ("geometric  (exponential mixing)",
     PgfFamily(MixingLaw.exponential(1.0), theta=0.5)),
    ("neg binomial (gamma(2) mixing)",
     PgfFamily(MixingLaw.gamma(2.0), theta=0.5)),
    ("poisson    (degenerate mixing)",
     PgfFamily(MixingLaw.degenerate(1.0), theta=0.5)),
)

for name, family in families:
    support, probs, tail = pgf_pmf(family, 12)
    draws = pgf_sample(family, rng, n)
    freq = np.bincount(draws, minlength=13)[:13] / n
    print(name)
    print("  m     pmf      simulated")
    for m in range(6):
        print(f"  {m}   {probs[m]:7.4f}   {freq[m]:7.4f}")
    print(f"  pmf tail beyond m=12: {tail:.2e}\n")

# the PGF itself is a sample mean of s^N; check a shifted strided family
family = PgfFamily(MixingLaw.gamma(2.0), theta=0.7, shift=1, stride=2)
draws = pgf_sample(family, rng, n)
print("shift=1 stride=2 family: counts live on 1 + 2*N0 ->",
      np.unique(draws)[:5], "...")
print("   s    pgf_eval   mean of s^N")
for s in (0.2, 0.5, 0.8):
    print(f" {s:4.1f}   {pgf_eval(family, s):8.4f}   "
          f"{np.mean(s ** draws):8.4f}")
