# Mixing the power of a stable characteristic function by a positive law
# with Laplace transform phi gives the CF phi(psi(t)).  Two classical
# consequences, checked numerically here:
#   * gamma(1)-mixed Gaussian (psi = t^2) is the Laplace law 1/(1 + t^2)
#   * gamma(nu)-mixed alpha-stable is the generalized Linnik CF
#     (1 + lam*|t|^alpha)^(-nu)
# The sampler is exact: X = Z^(1/alpha) * S with Z from the mixer and S
# strictly stable, so the empirical CF converges at the usual 1/sqrt(n).

import numpy as np

from phimix import (MixingLaw, StableExponent, empirical_cf, ks_distance,
                    linnik_cf, mixture_cf, sample_mixture_id, spawn_rng)

n = 20_000
rng = spawn_rng(1001)

# closed-form identity first: the two CF constructions must coincide
t_grid = np.linspace(-5.0, 5.0, 11)
for alpha, nu in ((2.0, 1.0), (1.0, 1.0), (1.5, 2.0)):
    lhs = mixture_cf(MixingLaw.gamma(nu), StableExponent(1.0, alpha), t_grid)
    rhs = linnik_cf(1.0, alpha, 0.0, nu, t_grid)
    print(f"alpha={alpha:3.1f} nu={nu:3.1f}  "
          f"max |mixture_cf - linnik_cf| = {np.abs(lhs - rhs).max():.2e}")

# Monte-Carlo check of the Laplace case
mixing = MixingLaw.gamma(1.0)
exponent = StableExponent(1.0, 2.0)
x = sample_mixture_id(mixing, exponent, rng, n)

print(f"\ngamma(1)-mixed Gaussian, n = {n}")
print("   t    empirical CF   1/(1+t^2)")
for t in (0.5, 1.0, 2.0, 4.0):
    emp = empirical_cf(x, t).real
    print(f"{t:5.1f}   {emp:12.4f}   {1.0 / (1.0 + t * t):9.4f}")

# the marginal is standard Laplace; compare with its d.f directly
laplace_df = lambda v: np.where(v < 0.0, 0.5 * np.exp(v),
                                1.0 - 0.5 * np.exp(-v))
print(f"KS distance to the Laplace d.f: {ks_distance(x, laplace_df):.4f}"
      f"  (about 1/sqrt(n) = {1.0 / np.sqrt(n):.4f} expected)")
