r"""
Variance limits and efficiency
------------------------------
Both estimators satisfy n * Var -> constant, and the constants are explicit.
Against the joint Cramer-Rao floor of 4 sigma^2 they can be compared shift by
shift: the Mobius estimator attains the floor exactly at -mu + sigma*i.
"""
import math

import numpy as np

from cqmeans import (
    CauchyParams,
    asymptotic_variance_geometric,
    asymptotic_variance_mobius,
    cramer_rao_bound,
)

params = CauchyParams(0.0, 1.0)
floor = cramer_rao_bound(params, 1)

#%%
# The plain geometric mean of standard Cauchy samples has limit pi^2/2, about
# 81% efficient.
geo = asymptotic_variance_geometric(params, 0.0)
print(f"geometric, shift 0 : limit={geo.nvar_limit:.6f} "
      f"(pi^2/2={math.pi**2 / 2:.6f}), efficiency={floor / geo.nvar_limit:.4f}")

#%%
# The Mobius estimator's limit is sigma/Im(a) * |gamma + a|^2; at the optimal
# shift it meets the Cramer-Rao floor exactly.
for alpha in (1j, 2j, 1 + 1j, 0.5j):
    mob = asymptotic_variance_mobius(params, alpha)
    print(f"mobius, shift {alpha!s:>7}: limit={mob.nvar_limit:.4f}, "
          f"efficiency={floor / mob.nvar_limit:.4f}")

#%%
# Scan shifts along the imaginary axis: the minimum sits at sigma = 1, and the
# limit blows up as the shift approaches the real axis.
print("\n Im(a)    n*Var limit")
for b in (2.0, 1.5, 1.0, 0.5, 0.1, 1e-3, 1e-6):
    v = asymptotic_variance_mobius(params, b * 1j).nvar_limit
    print(f"{b:8.1e}  {v:12.4f}")

#%%
# The geometric mean never reaches the floor but is remarkably flat in its
# shift, a reasonable default when nothing is known about the parameters.
print("\n shift a      geometric limit   efficiency")
for a in (0.0, 1j, 1.0, -1 + 1j, 2 + 2j):
    v = asymptotic_variance_geometric(params, a).nvar_limit
    print(f"{a!s:>9}  {v:16.6f}   {floor / v:.4f}")

#%%
# Theoretical limits agree with a quick simulation (common draws, n = 300).
rng = np.random.default_rng(5)
x = np.tan(math.pi * (rng.random((4000, 300)) - 0.5))
for alpha in (1j, 2j):
    est = 1.0 / np.mean(1.0 / (x + alpha), axis=1) - alpha
    nvar = 300 * (est.real.var(ddof=1) + est.imag.var(ddof=1))
    print(f"shift {alpha}: simulated n*Var = {nvar:.3f}, "
          f"theory = {asymptotic_variance_mobius(params, alpha).nvar_limit:.3f}")
