import math

import numpy as np
import pytest

from cqmeans import (
    CayleyDisk,
    DomainError,
    MobiusReciprocal,
    ShiftedLog,
    qam,
)


def central_difference(gen, z, h=1e-6):
    """Complex derivative of gen.apply from central differences on both axes."""
    dx = (gen.apply(z + h) - gen.apply(z - h)) / (2 * h)
    dy = (gen.apply(z + 1j * h) - gen.apply(z - 1j * h)) / (2j * h)
    return dx, dy


class TestApply:
    def test_shifted_log_of_negative_real(self):
        assert ShiftedLog(0.0).apply(-1.0) == complex(0.0, math.pi)

    def test_mobius_at_zero(self):
        assert MobiusReciprocal(1j).apply(0.0) == -1j

    def test_cayley_at_zero(self):
        assert CayleyDisk(1j).apply(0.0) == -1.0

    def test_singularity_names_sample_index(self):
        with pytest.raises(DomainError, match="sample 2"):
            ShiftedLog(1.0).apply(np.array([0.0, 2.0, -1.0]))


class TestInvert:
    def test_shifted_log(self):
        assert ShiftedLog(0.0).invert(complex(0.0, math.pi / 2)) == pytest.approx(1j)

    def test_mobius(self):
        assert MobiusReciprocal(1j).invert(-1j) == pytest.approx(0.0, abs=1e-15)

    def test_cayley(self):
        assert CayleyDisk(1j).invert(-1.0) == pytest.approx(0.0, abs=1e-15)

    def test_excluded_image_points_raise(self):
        with pytest.raises(DomainError):
            MobiusReciprocal(1j).invert(0.0)
        with pytest.raises(DomainError):
            CayleyDisk(1j).invert(1.0)

    @pytest.mark.parametrize(
        "gen",
        [ShiftedLog(0.0), ShiftedLog(1 + 2j), MobiusReciprocal(1j),
         MobiusReciprocal(-2 + 0.5j), CayleyDisk(0.5 + 1.5j)],
    )
    def test_round_trip(self, gen):
        rng = np.random.default_rng(5)
        x = rng.standard_cauchy(500)
        if gen.alpha.imag == 0.0:
            x = x[np.abs(x + gen.alpha.real) > 1e-6]
        back = np.array([gen.invert(gen.apply(xi)) for xi in x])
        assert np.allclose(back, x, rtol=1e-12, atol=1e-12)


class TestDerivative:
    def test_shifted_log_values(self):
        assert ShiftedLog(0.0).derivative(1j) == pytest.approx(-1j)
        assert ShiftedLog(1j).derivative(1j) == pytest.approx(-0.5j)

    def test_mobius_value(self):
        assert MobiusReciprocal(1j).derivative(1j) == pytest.approx(0.25)

    def test_matches_central_differences(self):
        gens = [ShiftedLog(0.0), ShiftedLog(1 + 1j), MobiusReciprocal(2j),
                CayleyDisk(1j)]
        rng = np.random.default_rng(3)
        for gen in gens:
            for _ in range(25):
                z = complex(rng.uniform(-3, 3), rng.uniform(0.5, 3))
                want = gen.derivative(z)
                dx, dy = central_difference(gen, z)
                assert dx == pytest.approx(want, rel=1e-6)
                assert dy == pytest.approx(want, rel=1e-6)


class TestQam:
    def test_geometric_of_plus_minus_one(self):
        assert qam(ShiftedLog(0.0), [1.0, -1.0]) == 1j

    def test_constant_samples_are_fixed_points(self):
        for gen in (ShiftedLog(0.0), ShiftedLog(1j), MobiusReciprocal(1j),
                    CayleyDisk(2j)):
            assert qam(gen, [3.5] * 7) == pytest.approx(3.5, rel=1e-12)

    def test_mobius_escapes_the_sample_range(self):
        # (b, -b) with alpha = i has mean b^2 * i: above max|x| for b = 10 ...
        big = qam(MobiusReciprocal(1j), [10.0, -10.0])
        assert big == pytest.approx(100j, rel=1e-12)
        assert abs(big) > 10.0
        # ... and below min|x| for small b
        small = qam(MobiusReciprocal(1j), [0.1, -0.1])
        assert abs(small) == pytest.approx(0.01, rel=1e-10)
        assert abs(small) < 0.1

    def test_plain_geometric_mean_respects_min_max(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            x = rng.standard_cauchy(rng.integers(1, 20))
            x = x[x != 0]
            if x.size == 0:
                continue
            m = abs(qam(ShiftedLog(0.0), x))
            lo, hi = np.min(np.abs(x)), np.max(np.abs(x))
            assert lo * (1 - 1e-12) <= m <= hi * (1 + 1e-12)

    def test_mean_stays_in_upper_half_plane(self):
        rng = np.random.default_rng(23)
        gens = [ShiftedLog(0.0), ShiftedLog(2.0), ShiftedLog(-1 + 1j),
                MobiusReciprocal(1j), MobiusReciprocal(3 + 0.25j)]
        for _ in range(300):
            x = rng.standard_cauchy(rng.integers(1, 30))
            for gen in gens:
                if gen.alpha.imag == 0.0 and np.any(x + gen.alpha.real == 0.0):
                    continue
                assert qam(gen, x).imag >= -1e-12

    def test_mobius_and_cayley_define_the_same_mean(self):
        rng = np.random.default_rng(29)
        for alpha in (1j, 0.5 + 2j, -3 + 0.7j):
            for _ in range(100):
                x = rng.standard_cauchy(rng.integers(1, 25))
                a = qam(MobiusReciprocal(alpha), x)
                b = qam(CayleyDisk(alpha), x)
                assert a == pytest.approx(b, rel=1e-10, abs=1e-10)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(31)
        x = rng.standard_cauchy(1000)
        for gen in (ShiftedLog(0.0), MobiusReciprocal(1j)):
            base = qam(gen, x)
            for _ in range(5):
                shuffled = rng.permutation(x)
                assert qam(gen, shuffled) == pytest.approx(base, rel=1e-13)

    def test_empty_and_nonfinite_samples_rejected(self):
        with pytest.raises(DomainError):
            qam(ShiftedLog(0.0), [])
        with pytest.raises(DomainError, match="index 1"):
            qam(ShiftedLog(0.0), [1.0, math.nan])

    def test_singular_sample_rejected_not_perturbed(self):
        with pytest.raises(DomainError, match="sample 1"):
            qam(ShiftedLog(-2.0), [1.0, 2.0, 3.0])


class TestAlphaValidation:
    def test_shifted_log_needs_closed_upper_half_plane(self):
        ShiftedLog(1.0)
        ShiftedLog(2 + 0j)
        with pytest.raises(DomainError):
            ShiftedLog(-1j)

    def test_mobius_needs_open_upper_half_plane(self):
        with pytest.raises(DomainError):
            MobiusReciprocal(1.0)
        with pytest.raises(DomainError):
            MobiusReciprocal(1 - 2j)

    def test_cayley_needs_open_upper_half_plane(self):
        with pytest.raises(DomainError):
            CayleyDisk(0.0)

    def test_nonfinite_alpha_rejected(self):
        with pytest.raises(DomainError):
            ShiftedLog(complex(math.inf, 1.0))
