r"""
Estimating Cauchy parameters
----------------------------
The arithmetic mean of Cauchy samples estimates nothing: it has the same
distribution as a single draw.  The geometric and Mobius-reciprocal means, in
contrast, converge to mu + sigma*i, so one complex number estimates location
and scale simultaneously, in closed form.
"""
import numpy as np

from cqmeans import (
    CauchyParams,
    geometric_estimate,
    mobius_estimate,
    sample,
    sign_dichotomy,
    two_step_mobius,
)

#%%
# Draw a reproducible sample from C(mu=2, sigma=0.5) and watch the arithmetic
# mean wander while the quasi-arithmetic estimates settle.
params = CauchyParams(2.0, 0.5)
x = sample(params, seed=20240809, count=100_000)
for n in (100, 1_000, 10_000, 100_000):
    arith = np.mean(x[:n])
    geo = geometric_estimate(x[:n], alpha=1j).estimate
    mob = mobius_estimate(x[:n], alpha=1j).estimate
    print(f"n={n:>6}  arithmetic={arith:+9.3f}   "
          f"geometric=({geo.real:.4f}, {geo.imag:.4f})   "
          f"mobius=({mob.real:.4f}, {mob.imag:.4f})")
print("truth: (2.0000, 0.5000)")

#%%
# With a real shift the geometric mean has a blind spot: whenever all samples
# share a sign, its imaginary part is exactly zero and the scale estimate
# degenerates.  The record flags it, and sign_dichotomy predicts it.
small = sample(params, seed=7, count=4)   # all positive with high probability
rec = geometric_estimate(small, alpha=0.0)
print("samples:", np.round(small, 3))
print("estimate:", rec.estimate, " degenerate:", rec.degenerate_imaginary)
print("all same sign:", sign_dichotomy(small, 0.0))

#%%
# A complex shift removes the degeneracy (the scale estimate is positive
# unless the samples are literally identical).
rec = geometric_estimate(small, alpha=1j)
print("with shift i:", rec.estimate, " degenerate:", rec.degenerate_imaginary)

#%%
# The Mobius estimator's variance depends on its shift; the best shift is
# -mu + sigma*i, which needs the unknown parameters.  The two-step estimator
# spends half the sample on a pilot to place the shift, then re-estimates.
x = sample(params, seed=99, count=10_000)
rec = two_step_mobius(x, pilot_alpha=1j)
print("two-step estimate:", rec.estimate)
print("second-stage shift:", rec.alpha, " (ideal:", complex(-params.mu, params.sigma), ")")
