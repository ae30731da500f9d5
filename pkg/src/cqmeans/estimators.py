"""Point estimators of the joint Cauchy parameter gamma = mu + sigma*i.

Each estimator is a quasi-arithmetic mean of the raw samples and therefore
closed-form: no iteration, no order statistics.  The real part estimates the
location, the imaginary part the scale.

``geometric_estimate``
    Shifted geometric mean prod_j (x_j + alpha)^{1/n} - alpha, defined for
    alpha in the closed upper half plane.  Unbiased from n = 2 on.  For real
    alpha the scale estimate degenerates to exactly zero precisely when all
    shifted samples share one sign, which happens with positive probability;
    ``sign_dichotomy`` exposes that test directly.

``mobius_estimate``
    n / sum_j 1/(x_j + alpha) - alpha for alpha strictly inside the upper
    half plane.  Unbiased from n = 3 on.  Every summand 1/(x_j + alpha) has
    strictly negative imaginary part, so the denominator cannot vanish.

``two_step_mobius``
    Data-driven shift: a pilot Mobius estimate on the first half of the
    sample picks the variance-minimizing shift -mu_hat + sigma_hat*i, and the
    second half is re-estimated at that shift.  The halves are disjoint so
    the second stage stays conditionally unbiased given the pilot.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .generators import MobiusReciprocal, ShiftedLog, qam

GEOMETRIC = "geometric"
MOBIUS = "mobius"
TWO_STEP_MOBIUS = "two_step_mobius"

_MIN_UNBIASED_N = {GEOMETRIC: 2, MOBIUS: 3}


@dataclass(frozen=True)
class EstimateRecord:
    """One point estimate with the inputs needed to reproduce it."""

    estimator: str
    alpha: complex
    n: int
    estimate: complex
    degenerate_imaginary: bool

    @property
    def mu_hat(self):
        return self.estimate.real

    @property
    def sigma_hat(self):
        return self.estimate.imag

    @property
    def meets_unbiased_n(self):
        """Whether n is large enough for the estimator's unbiasedness to hold."""
        return self.n >= _MIN_UNBIASED_N.get(self.estimator, 1)


def _record(kind, alpha, samples, estimate):
    return EstimateRecord(
        estimator=kind,
        alpha=complex(alpha),
        n=len(samples),
        estimate=estimate,
        degenerate_imaginary=estimate.imag <= 0.0,
    )


def geometric_estimate(samples, alpha=0.0):
    """Shifted geometric mean of ``samples`` at shift ``alpha`` (Im >= 0)."""
    samples = np.asarray(samples, dtype=float)
    est = qam(ShiftedLog(alpha), samples)
    return _record(GEOMETRIC, alpha, samples, est)


def mobius_estimate(samples, alpha):
    """Mobius-reciprocal mean of ``samples`` at shift ``alpha`` (Im > 0)."""
    samples = np.asarray(samples, dtype=float)
    est = qam(MobiusReciprocal(alpha), samples)
    return _record(MOBIUS, alpha, samples, est)


def two_step_mobius(samples, pilot_alpha):
    """Two-stage Mobius estimate with a data-driven second-stage shift.

    Needs at least 6 samples (3 per half, the minimum for unbiasedness).
    If the pilot's scale estimate is not positive the pilot shift is reused
    unchanged for the second stage.
    """
    samples = np.asarray(samples, dtype=float)
    n = len(samples)
    if n < 6:
        raise DomainError("two_step_mobius: need at least 6 samples")
    pilot_alpha = complex(pilot_alpha)
    if pilot_alpha.imag <= 0:
        raise DomainError("two_step_mobius: pilot alpha must have positive imaginary part")
    half = n // 2
    pilot = mobius_estimate(samples[:half], pilot_alpha).estimate
    if pilot.imag > 0:
        alpha_star = complex(-pilot.real, pilot.imag)
    else:
        alpha_star = pilot_alpha
    est = mobius_estimate(samples[half:], alpha_star).estimate
    return EstimateRecord(
        estimator=TWO_STEP_MOBIUS,
        alpha=alpha_star,
        n=n,
        estimate=est,
        degenerate_imaginary=est.imag <= 0.0,
    )


def sign_dichotomy(samples, alpha_real=0.0):
    """True iff all x_i + alpha share one sign.

    For real shifts this is exactly equivalent to the geometric estimate
    having zero imaginary part: the log of each shifted sample contributes an
    angle of exactly 0 or pi, and the mean angle leaves the axis unless all
    contributions agree.
    """
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise DomainError("sign_dichotomy: need at least one sample")
    alpha_real = float(alpha_real)
    shifted = x + alpha_real
    if np.any(shifted == 0.0):
        idx = int(np.flatnonzero(shifted == 0.0)[0])
        raise DomainError(f"sign_dichotomy: singular input at sample {idx}")
    return bool(np.all(shifted > 0.0) or np.all(shifted < 0.0))
