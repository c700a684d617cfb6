"""Synthetic Raman spectrum generation.

Clean spectra are sums of pseudo-Voigt peaks (convex mixes of unit-area
Lorentzian and Gaussian kernels) on a uniform wavenumber grid, optionally
with a constant baseline. Noise is additive Gaussian, drawn from a seeded
generator so runs are reproducible.
"""

from dataclasses import dataclass

import numpy as np

from .spectral import ImagePlane, RgbImage, Signal1D


@dataclass(frozen=True)
class PeakSpec:
    """One pseudo-Voigt peak: position, weight, half-width, Lorentzian fraction."""

    center: float
    amplitude: float
    gamma: float
    eta: float

    def __post_init__(self):
        if not (self.gamma > 0):
            raise ValueError(f"gamma must be > 0, got {self.gamma}")
        if not (0.0 <= self.eta <= 1.0):
            raise ValueError(f"eta must be in [0, 1], got {self.eta}")


@dataclass(frozen=True)
class NoiseSpec:
    """Additive Gaussian noise parameters plus the RNG seed."""

    sigma: float
    mu: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not (self.sigma >= 0):
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")


@dataclass(frozen=True)
class SimulationRecipe:
    """Grid, peak list, baseline, and noise for one simulated spectrum."""

    grid_start: float
    grid_step: float
    n_points: int
    peaks: tuple
    noise: NoiseSpec
    baseline: float = 0.0

    def __post_init__(self):
        if not (self.grid_step > 0):
            raise ValueError(f"grid_step must be > 0, got {self.grid_step}")
        if self.n_points < 2:
            raise ValueError(f"n_points must be >= 2, got {self.n_points}")
        object.__setattr__(self, "peaks", tuple(self.peaks))

    @property
    def grid(self) -> np.ndarray:
        return self.grid_start + self.grid_step * np.arange(self.n_points)


def lorentzian(nu, center: float, gamma: float):
    """Unit-area Lorentzian, peak value 1/(pi*gamma)."""
    if not (gamma > 0):
        raise ValueError(f"gamma must be > 0, got {gamma}")
    nu = np.asarray(nu, dtype=float)
    out = gamma / (np.pi * ((nu - center) ** 2 + gamma**2))
    return float(out) if out.ndim == 0 else out


def gaussian(nu, center: float, gamma: float):
    """Unit-area Gaussian with standard deviation gamma."""
    if not (gamma > 0):
        raise ValueError(f"gamma must be > 0, got {gamma}")
    nu = np.asarray(nu, dtype=float)
    out = np.exp(-((nu - center) ** 2) / (2.0 * gamma**2)) / (np.sqrt(2.0 * np.pi) * gamma)
    return float(out) if out.ndim == 0 else out


def pseudo_voigt(nu, peak: PeakSpec):
    """Convex mix eta*Lorentzian + (1-eta)*Gaussian at nu."""
    return peak.eta * lorentzian(nu, peak.center, peak.gamma) + (1.0 - peak.eta) * gaussian(
        nu, peak.center, peak.gamma
    )


def simulate(recipe: SimulationRecipe):
    """Build the clean spectrum and a seeded noisy copy.

    Returns (clean, noisy) as Signal1D pairs on the same grid. The noise
    vector is drawn from numpy's default generator seeded with
    recipe.noise.seed, so identical recipes give bit-identical output.
    """
    nu = recipe.grid
    clean = np.full(recipe.n_points, recipe.baseline, dtype=float)
    for peak in recipe.peaks:
        clean += peak.amplitude * pseudo_voigt(nu, peak)
    rng = np.random.default_rng(recipe.noise.seed)
    noise = rng.normal(recipe.noise.mu, recipe.noise.sigma, size=recipe.n_points)
    return Signal1D(nu, clean), Signal1D(nu, clean + noise)


def paper_recipe(sigma: float = 0.02, seed: int = 42, n_points: int = 800,
                 grid_start: float = 700.0, grid_step: float = 0.25) -> SimulationRecipe:
    """Default two-peak recipe: a pure Gaussian at 800 and a half-Lorentzian
    pseudo-Voigt at 850, on an 800-point grid stepping by 0.25."""
    return SimulationRecipe(
        grid_start=grid_start,
        grid_step=grid_step,
        n_points=n_points,
        peaks=(
            PeakSpec(center=800.0, amplitude=0.8, gamma=4.9, eta=0.0),
            PeakSpec(center=850.0, amplitude=0.2, gamma=7.1, eta=0.5),
        ),
        noise=NoiseSpec(sigma=sigma, seed=seed),
    )


def smooth_rgb_image(size: int = 256, seed: int = 0, n_blobs: int = 12) -> RgbImage:
    """Seeded smooth RGB test image: per-channel sums of 2D Gaussian blobs,
    rescaled to [0.05, 0.95]. Useful as a known-clean reference for 2D tests."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size].astype(float)
    planes = []
    for _ in range(3):
        v = np.zeros((size, size))
        for _ in range(n_blobs):
            cx, cy = rng.uniform(0, size, size=2)
            s = rng.uniform(size / 16, size / 4)
            a = rng.uniform(-1.0, 1.0)
            v += a * np.exp(-((xx - cx) ** 2 + (yy - cy) ** 2) / (2.0 * s**2))
        lo, hi = v.min(), v.max()
        v = 0.05 + 0.9 * (v - lo) / (hi - lo)
        planes.append(ImagePlane(v))
    return RgbImage(*planes)


def add_image_noise(image: RgbImage, sigma: float, seed: int = 0) -> RgbImage:
    """Add seeded zero-mean Gaussian noise to every channel."""
    rng = np.random.default_rng(seed)
    noisy = [ImagePlane(p.values + rng.normal(0.0, sigma, size=p.shape)) for p in image.planes]
    return RgbImage(*noisy)
