import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracfilt import (
    FilterParams,
    ImagePlane,
    RgbImage,
    Signal1D,
    dft_forward,
    dft_inverse,
    filter_1d,
    filter_2d,
    filter_rgb,
    frequency_grid,
    transfer_gain_1d,
    transfer_gain_2d,
)
from oracles import naive_dft, naive_filter_1d, naive_filter_2d


class TestFrequencyGrid:
    def test_n4_unit_step(self):
        grid = frequency_grid(4, 1.0)
        np.testing.assert_allclose(grid.omega, [-np.pi, -np.pi / 2, 0.0, np.pi / 2])
        assert grid.omega[4 // 2] == 0.0

    def test_n2(self):
        grid = frequency_grid(2, 1.0)
        np.testing.assert_allclose(grid.omega, [-np.pi, 0.0])

    def test_paper_grid_spacing(self):
        grid = frequency_grid(800, 0.25)
        assert grid.delta_omega == pytest.approx(2 * np.pi / 200, rel=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 7, 8, 31, 800])
    def test_invariants(self, n):
        grid = frequency_grid(n, 0.7)
        assert grid.delta_omega == pytest.approx(2 * np.pi / (n * 0.7), rel=1e-12)
        np.testing.assert_allclose(grid.omega, grid.delta_omega * (np.arange(n) - n // 2))
        assert grid.omega[n // 2] == 0.0
        assert np.all(np.diff(grid.omega) > 0)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            frequency_grid(1, 1.0)
        with pytest.raises(ValueError):
            frequency_grid(4, 0.0)
        with pytest.raises(ValueError):
            frequency_grid(4, -1.0)


class TestTransferGain:
    def test_dc_gain_is_one(self):
        assert transfer_gain_1d(0.0, FilterParams(alpha=1.7, lam=50.0)) == 1.0

    def test_analytic_1d(self):
        assert transfer_gain_1d(1.0, FilterParams(1.0, 1.0)) == pytest.approx(0.5, abs=1e-15)
        assert transfer_gain_1d(2.0, FilterParams(0.5, 3.0)) == pytest.approx(1 / 7, rel=1e-12)

    def test_analytic_2d(self):
        assert transfer_gain_2d(0.0, 0.0, FilterParams(2.0, 99.0)) == 1.0
        assert transfer_gain_2d(3.0, 4.0, FilterParams(1.0, 1.0)) == pytest.approx(1 / 26, abs=1e-15)
        assert transfer_gain_2d(1.0, 1.0, FilterParams(0.5, 2.0)) == pytest.approx(
            1 / (1 + 2 * np.sqrt(2)), rel=1e-12
        )

    def test_negative_omega_uses_magnitude(self):
        params = FilterParams(1.3, 2.0)
        assert transfer_gain_1d(-1.5, params) == transfer_gain_1d(1.5, params)

    @given(
        omega=st.floats(-1e3, 1e3, allow_nan=False),
        alpha=st.floats(0.1, 4.0),
        lam=st.floats(0.0, 1e6),
    )
    def test_gain_bounds(self, omega, alpha, lam):
        gain = transfer_gain_1d(omega, FilterParams(alpha, lam))
        assert 0.0 < gain <= 1.0

    # omega and alpha bounded away from the regime where lam*|omega|^(2*alpha)
    # underflows below double-precision resolution of 1 + x.
    @given(omega=st.floats(0.05, 1e3), alpha=st.floats(0.1, 3.5))
    def test_strictly_decreasing_in_lambda(self, omega, alpha):
        gains = [transfer_gain_1d(omega, FilterParams(alpha, lam)) for lam in (0.1, 1.0, 10.0)]
        assert gains[0] > gains[1] > gains[2]

    def test_monotone_in_alpha_splits_at_unit_frequency(self):
        # |omega| > 1: larger alpha attenuates more; |omega| < 1: less.
        high = [transfer_gain_1d(2.0, FilterParams(a, 5.0)) for a in (0.5, 1.0, 2.0)]
        low = [transfer_gain_1d(0.5, FilterParams(a, 5.0)) for a in (0.5, 1.0, 2.0)]
        assert high[0] > high[1] > high[2]
        assert low[0] < low[1] < low[2]

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            FilterParams(alpha=0.0, lam=1.0)
        with pytest.raises(ValueError):
            FilterParams(alpha=1.0, lam=-0.5)


class TestDftContract:
    def test_constant_signal_is_dc_only(self):
        spectrum = dft_forward(np.full(10, 3.5))
        assert spectrum[0] == pytest.approx(35.0)
        np.testing.assert_allclose(spectrum[1:], 0.0, atol=1e-12)

    def test_impulse_is_flat(self):
        x = np.zeros(8)
        x[0] = 1.0
        np.testing.assert_allclose(dft_forward(x), np.ones(8), atol=1e-12)

    def test_matches_naive_dft(self):
        rng = np.random.default_rng(0)
        x = rng.normal(size=16)
        np.testing.assert_allclose(dft_forward(x), naive_dft(x), atol=1e-10)

    def test_roundtrip(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=33)
        assert np.max(np.abs(dft_inverse(dft_forward(x)).real - x)) < 1e-10

    def test_parseval(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=50)
        spectrum = dft_forward(x)
        lhs = np.sum(np.abs(x) ** 2)
        rhs = np.sum(np.abs(spectrum) ** 2) / len(x)
        assert abs(lhs - rhs) / lhs < 1e-10

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            dft_forward(np.array([]))
        with pytest.raises(ValueError):
            dft_inverse(np.array([]))


class TestSignal1DValidation:
    def test_rejects_short_and_nonuniform(self):
        with pytest.raises(ValueError):
            Signal1D([1.0], [2.0])
        with pytest.raises(ValueError):
            Signal1D([0.0, 1.0, 3.0], [0.0, 0.0, 0.0])
        with pytest.raises(ValueError):
            Signal1D([0.0, 1.0, 2.0], [0.0, np.nan, 0.0])
        with pytest.raises(ValueError):
            Signal1D([2.0, 1.0, 0.0], [0.0, 0.0, 0.0])


class TestFilter1D:
    def test_lambda_zero_is_identity(self, random_signal):
        out = filter_1d(random_signal, FilterParams(alpha=2.0, lam=0.0))
        assert np.max(np.abs(out.intensity - random_signal.intensity)) < 1e-10
        np.testing.assert_array_equal(out.nu, random_signal.nu)

    def test_constant_signal_passes_through(self):
        signal = Signal1D(np.arange(20.0), np.full(20, 4.2))
        out = filter_1d(signal, FilterParams(alpha=1.5, lam=100.0))
        assert np.max(np.abs(out.intensity - 4.2)) < 1e-10

    def test_reduces_gradient_norm_of_noisy_spectrum(self, paper_signals):
        from fracfilt import gradient_norm_1d

        _, noisy = paper_signals
        out = filter_1d(noisy, FilterParams(alpha=1.0, lam=10.0))
        assert gradient_norm_1d(out) < gradient_norm_1d(noisy)

    @pytest.mark.parametrize("n", [7, 8, 16, 31])
    def test_matches_naive_oracle(self, n):
        rng = np.random.default_rng(n)
        signal = Signal1D(np.arange(n) * 0.3, rng.normal(size=n))
        out = filter_1d(signal, FilterParams(alpha=1.3, lam=2.5))
        expected = naive_filter_1d(signal.intensity, 0.3, 1.3, 2.5)
        assert np.max(np.abs(out.intensity - expected)) < 1e-8

    def test_linearity(self):
        rng = np.random.default_rng(3)
        nu = np.arange(40) * 0.5
        u, v = rng.normal(size=40), rng.normal(size=40)
        params = FilterParams(alpha=1.7, lam=5.0)
        combined = filter_1d(Signal1D(nu, 2.0 * u - 3.0 * v), params).intensity
        separate = (
            2.0 * filter_1d(Signal1D(nu, u), params).intensity
            - 3.0 * filter_1d(Signal1D(nu, v), params).intensity
        )
        assert np.max(np.abs(combined - separate)) < 1e-9

    def test_mean_preserved(self, random_signal):
        out = filter_1d(random_signal, FilterParams(alpha=2.2, lam=1000.0))
        mean_in = np.mean(random_signal.intensity)
        assert np.mean(out.intensity) == pytest.approx(mean_in, rel=1e-10)

    def test_energy_non_expansion(self, random_signal):
        out = filter_1d(random_signal, FilterParams(alpha=1.0, lam=3.0))
        assert np.linalg.norm(out.intensity) <= np.linalg.norm(random_signal.intensity)

    def test_spectral_derivative_norm_contracts_in_lambda(self, random_signal):
        grid = frequency_grid(len(random_signal), random_signal.step)
        spectrum = np.fft.fftshift(dft_forward(random_signal.intensity))

        def deriv_norm(lam):
            gain = transfer_gain_1d(grid.omega, FilterParams(alpha=1.0, lam=lam))
            return np.sum(np.abs(grid.omega * gain * spectrum) ** 2)

        norms = [deriv_norm(lam) for lam in (0.0, 0.1, 1.0, 10.0, 100.0)]
        assert all(a >= b for a, b in zip(norms, norms[1:]))


class TestFilter2D:
    def test_lambda_zero_is_identity(self):
        rng = np.random.default_rng(4)
        plane = ImagePlane(rng.uniform(size=(9, 12)))
        out = filter_2d(plane, FilterParams(alpha=1.0, lam=0.0))
        assert np.max(np.abs(out.values - plane.values)) < 1e-10

    def test_constant_plane_passes_through(self):
        plane = ImagePlane(np.full((6, 7), 0.3))
        out = filter_2d(plane, FilterParams(alpha=2.0, lam=50.0))
        assert np.max(np.abs(out.values - 0.3)) < 1e-10

    def test_matches_naive_oracle_8x8(self):
        rng = np.random.default_rng(5)
        plane = ImagePlane(rng.uniform(size=(8, 8)))
        out = filter_2d(plane, FilterParams(alpha=1.0, lam=1.0))
        expected = naive_filter_2d(plane.values, 1.0, 1.0)
        assert np.max(np.abs(out.values - expected)) < 1e-8

    def test_mean_preserved(self):
        rng = np.random.default_rng(6)
        plane = ImagePlane(rng.uniform(size=(16, 10)))
        out = filter_2d(plane, FilterParams(alpha=1.8, lam=200.0))
        assert np.mean(out.values) == pytest.approx(np.mean(plane.values), rel=1e-10)

    def test_rejects_tiny_plane(self):
        with pytest.raises(ValueError):
            ImagePlane(np.zeros((1, 5)))


class TestFilterRgb:
    def _random_image(self, seed=7, shape=(12, 10)):
        rng = np.random.default_rng(seed)
        return RgbImage(*(ImagePlane(rng.uniform(size=shape)) for _ in range(3)))

    def test_lambda_zero_is_identity(self):
        image = self._random_image()
        out = filter_rgb(image, FilterParams(alpha=1.0, lam=0.0))
        for before, after in zip(image.planes, out.planes):
            assert np.max(np.abs(after.values - before.values)) < 1e-10

    def test_equal_channels_stay_equal(self):
        rng = np.random.default_rng(8)
        plane = rng.uniform(size=(11, 9))
        image = RgbImage(ImagePlane(plane), ImagePlane(plane.copy()), ImagePlane(plane.copy()))
        out = filter_rgb(image, FilterParams(alpha=1.5, lam=3.0))
        np.testing.assert_array_equal(out.r.values, out.g.values)
        np.testing.assert_array_equal(out.g.values, out.b.values)

    def test_channel_swap_commutes_with_filtering(self):
        image = self._random_image(seed=9)
        params = FilterParams(alpha=2.0, lam=7.0)
        swapped_then_filtered = filter_rgb(RgbImage(image.b, image.g, image.r), params)
        filtered_then_swapped = filter_rgb(image, params)
        np.testing.assert_array_equal(
            swapped_then_filtered.r.values, filtered_then_swapped.b.values
        )
        np.testing.assert_array_equal(
            swapped_then_filtered.b.values, filtered_then_swapped.r.values
        )

    def test_mismatched_planes_rejected(self):
        with pytest.raises(ValueError):
            RgbImage(
                ImagePlane(np.zeros((4, 4))),
                ImagePlane(np.zeros((4, 5))),
                ImagePlane(np.zeros((4, 4))),
            )
