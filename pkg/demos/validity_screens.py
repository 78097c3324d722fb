# Numerical screens for two structural properties and their failure
# fixtures.
#
# Self-decomposability (class L): X is class L iff for every c in (0,1)
# the factor with CF f(t)/f(ct) is itself a CF.  On the LT side the
# mixture phi(psi) is class L when phi(s)/phi(cs) is completely monotone;
# both screens locate the failing order or grid cell when they reject.
#
# Max-infinite divisibility: every power H^s must be a d.f (monotone,
# nonnegative rectangle masses) with rectangular support.  Two fixtures
# fail for different reasons: an L-shaped-support d.f and an NQD lattice
# law whose rectangle masses go negative even though its support is fine.

import numpy as np

from phimix import (MidLaw, MixingLaw, classl_factor_check, mid_power_check,
                    selfdecomp_cf_check, support_rectangle_check)
from phimix.fixtures import bernoulli_lt, lshaped_df, nqd_lattice_df, uniform_cf

c_grid = (0.3, 0.5, 0.7)
s_grid = np.linspace(0.0, 10.0, 25)
t_grid = np.linspace(-5.0, 5.0, 41)

print("LT factor screen (complete monotonicity of phi(s)/phi(cs)):")
for name, law in (("gamma(0.5)", MixingLaw.gamma(0.5)),
                  ("exponential", MixingLaw.exponential(1.0)),
                  ("degenerate(1)", MixingLaw.degenerate(1.0))):
    report = classl_factor_check(law, c_grid, s_grid)
    print(f"  {name:14s} passed = {report.passed}")
report = classl_factor_check(bernoulli_lt, c_grid, s_grid)
worst = min(e.worst_value for e in report.entries)
print(f"  bernoulli LT   passed = {report.passed}  "
      f"(worst finite-difference sign {worst:.3f})")

print("\nCF factor screen (Toeplitz PSD of f(t)/f(ct)):")
linnik = lambda t: 1.0 / (1.0 + np.abs(np.asarray(t, dtype=float)) ** 1.5)
report = selfdecomp_cf_check(linnik, c_grid, t_grid)
print(f"  linnik 1.5     passed = {report.passed}")
report = selfdecomp_cf_check(uniform_cf, c_grid, t_grid)
bad = [e.c for e in report.entries if not e.passed]
print(f"  uniform CF     passed = {report.passed}  (fails at c = {bad})")

print("\nmax-ID screens (powers are d.f's, support is a rectangle):")
axes = [np.array([-0.5, 0.0, 0.5, 1.0, 1.5])] * 2
frechet = MidLaw("product-frechet", shapes=(1.0, 1.0))
fx_axes = [np.concatenate(([0.0], np.geomspace(0.5, 8.0, 5)))] * 2
for name, law, ax in (("product-Frechet", frechet, fx_axes),
                      ("L-shaped fixture", lshaped_df, axes),
                      ("NQD lattice fixture", nqd_lattice_df, axes)):
    power = mid_power_check(law, ax, powers=(0.5, 1.0, 2.0))
    support = support_rectangle_check(law, ax)
    print(f"  {name:20s} powers = {'pass' if power.passed else 'FAIL':4s}"
          f"  support = {'pass' if support.passed else 'FAIL'}")
    if power.violations:
        v = power.violations[0]
        print(f"    first violation: power {v.power:g}, {v.check} at "
              f"{tuple(v.point)}, value {v.value:.4f}")

print("\nboth fixtures are genuine d.f's at power 1:")
far = np.array([9e9, 9e9])
print(f"  lshaped mass on the plane  = {float(lshaped_df(far)):.1f}")
print(f"  nqd mass on the plane      = {float(nqd_lattice_df(far)):.1f}")
