r"""
Branch arithmetic
-----------------
Everything in this package rests on one choice of complex logarithm: the
argument is taken in [-pi/2, 3pi/2), putting the cut on the nonpositive
imaginary axis.  That keeps the whole real line (minus the origin) inside the
domain, so negative samples have logarithms and fractional powers.
"""
import math

import numpy as np

from cqmeans import branch_arg, branch_log, branch_pow

#%%
# Negative reals pick up an imaginary part of exactly pi.
print("log(-1)   =", branch_log(-1.0))
print("log(-2.5) =", branch_log(-2.5))

#%%
# The argument range is [-pi/2, 3pi/2); points on the cut itself are assigned
# the closed left end.
for z in (1.0, 1j, -1.0, -1j, -1 - 1j):
    print(f"arg({z!s:>8}) = {branch_arg(z):+.6f}")

#%%
# Powers come from the logarithm: z**p = exp(p log z).  The square root of -1
# is i, not an error.
print("(-1)^(1/2)  =", branch_pow(-1.0, 0.5))
print("(-8)^(1/3)  =", branch_pow(-8.0, 1.0 / 3.0))

#%%
# A word of warning that matters later: with negative numbers involved, the
# product of powers and the power of the product can disagree.  The geometric
# mean of samples is always the product of the individual roots.
root = branch_pow(-1.0, 0.5)
print("(-1)^(1/2) * (-1)^(1/2) =", root * root)
print("((-1) * (-1))^(1/2)     =", branch_pow(1.0, 0.5))

#%%
# On positive reals the branch power agrees with the ordinary one and stays
# exactly real.
x = np.array([0.5, 2.0, 9.0])
print("x^0.5 via branch:", branch_pow(x, 0.5))
print("math.sqrt       :", [math.sqrt(v) for v in x])
