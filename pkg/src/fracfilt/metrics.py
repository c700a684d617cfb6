"""Quality metrics for spectra and image planes.

1D: peak position and trapezoidal peak area over a window, the l2 norm of
forward differences scaled by the grid step, and RMSE against a reference.
2D: contrast (population standard deviation) and sharpness (mean forward-
difference gradient magnitude with zero extension beyond the boundary).
"""

from dataclasses import dataclass

import numpy as np

from .spectral import ImagePlane, Signal1D


@dataclass(frozen=True)
class PeakWindow:
    """Abscissa bounds [lo, hi] for area/position search."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise ValueError(f"window requires lo < hi, got [{self.lo}, {self.hi}]")


def _window_slice(signal: Signal1D, window: PeakWindow):
    mask = (signal.nu >= window.lo) & (signal.nu <= window.hi)
    if not mask.any():
        raise ValueError(f"window [{window.lo}, {window.hi}] contains no samples")
    return signal.nu[mask], signal.intensity[mask]


def peak_position(signal: Signal1D, window: PeakWindow) -> float:
    """Abscissa of the maximum sample in the window; ties go to the smallest."""
    nu, intensity = _window_slice(signal, window)
    return float(nu[np.argmax(intensity)])


def peak_area(signal: Signal1D, window: PeakWindow) -> float:
    """Composite trapezoid integral of intensity over the in-window samples."""
    nu, intensity = _window_slice(signal, window)
    if nu.size < 2:
        raise ValueError("window contains fewer than 2 samples")
    return float(np.trapezoid(intensity, nu))


def gradient_norm_1d(signal: Signal1D) -> float:
    """l2 norm of forward differences divided by the grid step."""
    return float(np.linalg.norm(np.diff(signal.intensity) / signal.step))


def _values(x) -> np.ndarray:
    if isinstance(x, Signal1D):
        return x.intensity
    if isinstance(x, ImagePlane):
        return x.values
    return np.asarray(x, dtype=float)


def rmse(a, b) -> float:
    """Root-mean-square difference between two signals, planes, or arrays."""
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise ValueError(f"shape mismatch: {va.shape} vs {vb.shape}")
    return float(np.sqrt(np.mean((va - vb) ** 2)))


def contrast(plane: ImagePlane) -> float:
    """Population standard deviation of all pixels."""
    return float(np.std(plane.values))


def sharpness(plane: ImagePlane) -> float:
    """Mean forward-difference gradient magnitude over all pixels.

    The image is treated as zero outside its rectangle, so the last column
    and row difference against 0.
    """
    v = plane.values
    gx = np.diff(v, axis=1, append=0.0)
    gy = np.diff(v, axis=0, append=0.0)
    return float(np.mean(np.sqrt(gx**2 + gy**2)))
