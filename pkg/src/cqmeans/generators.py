"""Quasi-arithmetic means of real samples with complex-valued transforms.

A quasi-arithmetic mean applies an injective holomorphic transform f to each
sample, averages the transformed values, and maps the average back through
f^{-1}.  Because the transforms here take complex values on the real line,
the mean is defined for samples of either sign, and its imaginary part is
meaningful (for Cauchy data it estimates the scale).

Three transforms are provided:

``ShiftedLog(alpha)``
    f(x) = log(x + alpha) on the branch of :mod:`cqmeans.branch`.  With
    alpha = 0 the mean is the classical geometric mean, extended to negative
    samples.  Requires Im(alpha) >= 0.

``MobiusReciprocal(alpha)``
    f(x) = 1/(x + alpha).  With real alpha this would be the harmonic mean,
    whose image is not convex, so Im(alpha) > 0 is required; the image is then
    the closed disk of radius 1/(2 Im alpha) centered at -i/(2 Im alpha),
    minus the origin.

``CayleyDisk(alpha)``
    f(x) = (x + conj(alpha))/(x + alpha), a fractional-linear map onto the
    closed unit disk minus {1}.  Defines the same mean as MobiusReciprocal
    with the same alpha; the bounded image is occasionally nicer numerically.

The averaging bound min|x_i| <= |mean| <= max|x_i| familiar from the plain
geometric mean does NOT carry over to the Mobius transforms: with alpha = i
the samples (b, -b) give a mean of magnitude b**2, which escapes the sample
range in both directions depending on b.
"""

import math

import numpy as np

from .branch import branch_log
from .exceptions import DomainError

_IMAG_FLOOR = 1e-9  # debug-assert tolerance for means leaving the upper half plane


def _exact_mean(values):
    """Mean of a 1-d float array via exactly-rounded compensated summation."""
    return math.fsum(values.tolist()) / len(values)


def _mean_complex(values):
    return complex(_exact_mean(values.real), _exact_mean(values.imag))


def _cos_sin_pi_fraction(k, n):
    """(cos, sin) of pi*k/n for integers 0 <= k <= n, exact on the axes.

    Exactness at k in {0, n} is what makes the imaginary part of a real-shift
    geometric mean vanish exactly when and only when all shifted samples
    share a sign.
    """
    if k == 0:
        return 1.0, 0.0
    if k == n:
        return -1.0, 0.0
    if 2 * k == n:
        return 0.0, 1.0
    if 2 * k > n:
        c, s = _cos_sin_pi_fraction(n - k, n)
        return -c, s
    ang = math.pi * (k / n)
    return math.cos(ang), math.sin(ang)


class Generator:
    """Base class for the transforms defining a quasi-arithmetic mean.

    Subclasses implement the forward map ``apply``, the inverse ``invert``
    and the complex derivative ``derivative``; :func:`qam` combines them.
    """

    def __init__(self, alpha):
        alpha = complex(alpha)
        if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
            raise DomainError(f"{type(self).__name__}: alpha must be finite")
        self.alpha = alpha
        self._check_alpha()

    def __repr__(self):
        return f"{type(self).__name__}(alpha={self.alpha!r})"

    def _check_alpha(self):
        raise NotImplementedError

    def _shift(self, x, what):
        """x + alpha with a pole check naming the offending sample index."""
        z = np.asarray(x) + self.alpha
        if np.any(z == 0):
            idx = int(np.flatnonzero(np.atleast_1d(z) == 0)[0])
            raise DomainError(
                f"{type(self).__name__}.{what}: singular input at sample {idx}"
            )
        if np.ndim(x) == 0:
            return complex(z)
        return z

    def apply(self, x):
        raise NotImplementedError

    def invert(self, w):
        raise NotImplementedError

    def derivative(self, z):
        raise NotImplementedError

    def _qam(self, samples):
        return self.invert(_mean_complex(self.apply(samples)))


class ShiftedLog(Generator):
    """f(x) = log(x + alpha), the (shifted) geometric mean transform."""

    def _check_alpha(self):
        if self.alpha.imag < 0:
            raise DomainError("ShiftedLog: alpha must lie in the closed upper half plane")

    def apply(self, x):
        return branch_log(self._shift(x, "apply"))

    def invert(self, w):
        out = np.exp(np.asarray(w, dtype=complex)) - self.alpha
        assert np.all(np.imag(out) >= -_IMAG_FLOOR * np.maximum(1.0, np.abs(out)))
        if np.ndim(w) == 0:
            return complex(out)
        return out

    def derivative(self, z):
        return 1.0 / self._shift(z, "derivative")

    def _qam(self, samples):
        if self.alpha.imag == 0.0:
            # real shift: every log has imaginary part exactly 0 or pi, so the
            # mean angle is pi * (#negatives)/n and can be exponentiated with
            # exact axis values instead of a rounded generic complex exp
            shifted = samples + self.alpha.real
            if np.any(shifted == 0.0):
                idx = int(np.flatnonzero(shifted == 0.0)[0])
                raise DomainError(f"ShiftedLog.apply: singular input at sample {idx}")
            negatives = int(np.count_nonzero(shifted < 0.0))
            log_scale = _exact_mean(np.log(np.abs(shifted)))
            c, s = _cos_sin_pi_fraction(negatives, len(shifted))
            scale = math.exp(log_scale)
            return complex(scale * c - self.alpha.real, scale * s)
        return self.invert(_mean_complex(self.apply(samples)))


class MobiusReciprocal(Generator):
    """f(x) = 1/(x + alpha), the Mobius-transform mean with Im(alpha) > 0."""

    def _check_alpha(self):
        if self.alpha.imag <= 0:
            raise DomainError(
                "MobiusReciprocal: alpha must lie strictly in the upper half plane"
            )

    def apply(self, x):
        return 1.0 / self._shift(x, "apply")

    def invert(self, w):
        w = np.asarray(w, dtype=complex)
        if np.any(w == 0):
            raise DomainError("MobiusReciprocal.invert: 0 is not in the image")
        out = 1.0 / w - self.alpha
        assert np.all(np.imag(out) >= -_IMAG_FLOOR * np.maximum(1.0, np.abs(out)))
        if w.ndim == 0:
            return complex(out)
        return out

    def derivative(self, z):
        return -1.0 / self._shift(z, "derivative") ** 2


class CayleyDisk(Generator):
    """f(x) = (x + conj(alpha))/(x + alpha), mapping onto the unit disk."""

    def _check_alpha(self):
        if self.alpha.imag <= 0:
            raise DomainError("CayleyDisk: alpha must lie strictly in the upper half plane")

    def apply(self, x):
        z = self._shift(x, "apply")
        out = (np.asarray(x) + self.alpha.conjugate()) / z
        if np.ndim(x) == 0:
            return complex(out)
        return out

    def invert(self, w):
        w = np.asarray(w, dtype=complex)
        if np.any(w == 1):
            raise DomainError("CayleyDisk.invert: 1 is not in the image")
        out = (self.alpha.conjugate() - w * self.alpha) / (w - 1.0)
        assert np.all(np.imag(out) >= -_IMAG_FLOOR * np.maximum(1.0, np.abs(out)))
        if w.ndim == 0:
            return complex(out)
        return out

    def derivative(self, z):
        shifted = self._shift(z, "derivative")
        return (self.alpha - self.alpha.conjugate()) / shifted**2


def _validate_samples(samples):
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1:
        x = x.reshape(-1)
    if x.size == 0:
        raise DomainError("qam: need at least one sample")
    if not np.all(np.isfinite(x)):
        idx = int(np.flatnonzero(~np.isfinite(x))[0])
        raise DomainError(f"qam: non-finite sample at index {idx}")
    return x


def qam(generator, samples):
    """Quasi-arithmetic mean f^{-1}((1/n) sum_j f(x_j)) of real samples.

    The transformed values are averaged with compensated summation on the
    real and imaginary parts separately, so the result is reproducible and
    accurate for sample counts up to millions.

    Parameters
    ----------
    generator : Generator
        The transform f.
    samples : array_like
        Real samples, at least one, all finite.

    Returns
    -------
    complex
        The mean, a point of the closed upper half plane (up to rounding).
    """
    return generator._qam(_validate_samples(samples))
