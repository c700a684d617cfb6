"""Frequency-domain filtering core.

Implements the centered-spectrum pipeline: FFT, shift so the zero bin sits
at index floor(N/2), multiply by the gain 1/(1 + lambda*|omega|^(2*alpha)),
unshift, inverse FFT, and return the real part. The forward transform is
unnormalized and the inverse carries the 1/N factor (numpy's convention);
no dt factor is included, so lambda absorbs all grid-scale constants and
is therefore grid-dependent.
"""

from dataclasses import dataclass

import numpy as np

# Relative tolerance for the uniform-spacing check on abscissa grids.
SPACING_RTOL = 1e-9

# Imaginary residue allowed after inverse-transforming a filtered spectrum,
# relative to the max-abs of the input. Larger residues indicate a grid or
# shift bug, not round-off.
IMAG_RESIDUE_RTOL = 1e-9


class NumericalError(RuntimeError):
    """Raised when a computation produces numerically invalid output."""


@dataclass(frozen=True)
class FilterParams:
    """Fractional order and regularization weight of the filter."""

    alpha: float
    lam: float

    def __post_init__(self):
        if not (self.alpha > 0):
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not (self.lam >= 0):
            raise ValueError(f"lambda must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class FrequencyGrid:
    """Centered angular-frequency grid matching a shifted DFT layout."""

    omega: np.ndarray
    n: int
    delta_omega: float


@dataclass
class Signal1D:
    """Real-valued spectrum sampled on a uniform, strictly increasing grid."""

    nu: np.ndarray
    intensity: np.ndarray

    def __post_init__(self):
        self.nu = np.asarray(self.nu, dtype=float)
        self.intensity = np.asarray(self.intensity, dtype=float)
        if self.nu.ndim != 1 or self.intensity.ndim != 1:
            raise ValueError("nu and intensity must be 1D")
        if self.nu.size < 2:
            raise ValueError("signal needs at least 2 samples")
        if self.nu.size != self.intensity.size:
            raise ValueError("nu and intensity lengths differ")
        if not np.all(np.isfinite(self.intensity)) or not np.all(np.isfinite(self.nu)):
            raise ValueError("signal contains non-finite values")
        steps = np.diff(self.nu)
        if np.any(steps <= 0):
            raise ValueError("abscissa must be strictly increasing")
        step = steps[0]
        if np.max(np.abs(steps - step)) > SPACING_RTOL * abs(step):
            raise ValueError("abscissa spacing is not uniform")

    @property
    def step(self) -> float:
        return float(self.nu[1] - self.nu[0])

    def __len__(self) -> int:
        return self.nu.size


@dataclass
class ImagePlane:
    """Single-channel real-valued pixel matrix."""

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2:
            raise ValueError("image plane must be 2D")
        if min(self.values.shape) < 2:
            raise ValueError("image plane must be at least 2x2")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("image plane contains non-finite values")

    @property
    def shape(self):
        return self.values.shape


@dataclass
class RgbImage:
    """Triplet of image planes sharing dimensions."""

    r: ImagePlane
    g: ImagePlane
    b: ImagePlane

    def __post_init__(self):
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise ValueError("RGB planes must share dimensions")

    @property
    def shape(self):
        return self.r.shape

    @property
    def planes(self):
        return (self.r, self.g, self.b)


def frequency_grid(n: int, dt: float) -> FrequencyGrid:
    """Centered angular frequencies omega_k = (k - floor(n/2)) * 2*pi/(n*dt)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not (dt > 0):
        raise ValueError(f"dt must be > 0, got {dt}")
    delta_omega = 2.0 * np.pi / (n * dt)
    omega = delta_omega * (np.arange(n) - n // 2)
    return FrequencyGrid(omega=omega, n=n, delta_omega=delta_omega)


def transfer_gain_1d(omega, params: FilterParams):
    """Low-pass gain 1/(1 + lambda*|omega|^(2*alpha)); exactly 1 at omega=0."""
    w = np.abs(np.asarray(omega, dtype=float))
    # 0**(2*alpha) == 0 for alpha > 0, so the DC bin gets gain 1 exactly.
    gain = 1.0 / (1.0 + params.lam * w ** (2.0 * params.alpha))
    if np.ndim(omega) == 0:
        return float(gain)
    return gain


def transfer_gain_2d(omega1, omega2, params: FilterParams):
    """Isotropic gain 1/(1 + lambda*(omega1^2 + omega2^2)^alpha)."""
    w2 = np.asarray(omega1, dtype=float) ** 2 + np.asarray(omega2, dtype=float) ** 2
    gain = 1.0 / (1.0 + params.lam * w2 ** params.alpha)
    if np.ndim(gain) == 0:
        return float(gain)
    return gain


def dft_forward(x) -> np.ndarray:
    """Unnormalized forward DFT (no dt factor)."""
    x = np.asarray(x)
    if x.size == 0:
        raise ValueError("empty input")
    return np.fft.fft(x)


def dft_inverse(spectrum) -> np.ndarray:
    """Inverse DFT with the 1/N factor."""
    spectrum = np.asarray(spectrum)
    if spectrum.size == 0:
        raise ValueError("empty input")
    return np.fft.ifft(spectrum)


def _real_part(z: np.ndarray, input_scale: float) -> np.ndarray:
    """Return the real part, asserting the imaginary residue is round-off."""
    residue = float(np.max(np.abs(z.imag))) if z.size else 0.0
    bound = IMAG_RESIDUE_RTOL * max(input_scale, np.finfo(float).tiny)
    if residue > bound:
        raise NumericalError(
            f"imaginary residue {residue:.3e} exceeds bound {bound:.3e}; "
            "filtered spectrum lost conjugate symmetry"
        )
    return z.real


def filter_1d(signal: Signal1D, params: FilterParams) -> Signal1D:
    """Filter a spectrum through the fractional low-pass transfer function."""
    n = len(signal)
    grid = frequency_grid(n, signal.step)
    spectrum = np.fft.fftshift(dft_forward(signal.intensity))
    spectrum *= transfer_gain_1d(grid.omega, params)
    out = dft_inverse(np.fft.ifftshift(spectrum))
    scale = float(np.max(np.abs(signal.intensity)))
    return Signal1D(nu=signal.nu.copy(), intensity=_real_part(out, scale))


def filter_2d(plane: ImagePlane, params: FilterParams) -> ImagePlane:
    """Filter an image plane with the fractional Laplacian gain, dt = 1 pixel."""
    m, n = plane.shape
    w1 = frequency_grid(m, 1.0).omega
    w2 = frequency_grid(n, 1.0).omega
    gain = transfer_gain_2d(*np.meshgrid(w1, w2, indexing="ij"), params)
    spectrum = np.fft.fftshift(np.fft.fft2(plane.values))
    out = np.fft.ifft2(np.fft.ifftshift(gain * spectrum))
    scale = float(np.max(np.abs(plane.values)))
    return ImagePlane(values=_real_part(out, scale))


def filter_rgb(image: RgbImage, params: FilterParams) -> RgbImage:
    """Filter each channel independently; channels are never mixed."""
    return RgbImage(
        r=filter_2d(image.r, params),
        g=filter_2d(image.g, params),
        b=filter_2d(image.b, params),
    )
