"""Shannon-entropy scoring and (alpha, lambda) grid search.

A filtered output is scored by the entropy of a probability distribution
derived from it: 1D spectra are min-shifted, squared, and normalized;
images use a 256-bin intensity histogram per channel, summed over R, G, B.
The grid cell with the lowest entropy wins; ties break toward the smallest
lambda, then the smallest alpha.
"""

from dataclasses import dataclass

import numpy as np

from .spectral import FilterParams, ImagePlane, RgbImage, Signal1D, filter_1d, filter_2d, filter_rgb

PROB_SUM_TOL = 1e-9


@dataclass(frozen=True)
class ParamGrid:
    """Search space: strictly increasing alpha and lambda values."""

    alphas: tuple
    lambdas: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "lambdas", tuple(float(l) for l in self.lambdas))
        for name, vals in (("alphas", self.alphas), ("lambdas", self.lambdas)):
            if not vals:
                raise ValueError(f"{name} must be non-empty")
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError(f"{name} must be strictly increasing")
        if self.alphas[0] <= 0:
            raise ValueError("alphas must be > 0")
        if self.lambdas[0] < 0:
            raise ValueError("lambdas must be >= 0")


@dataclass(frozen=True)
class EntropySurface:
    """Grid-search record: one (alpha, lambda, H) entry per cell plus the argmin."""

    entries: tuple
    best: tuple  # (alpha, lambda, H)

    def to_csv(self, path):
        """Write `alpha,lambda,H` rows; the footer row is flagged `best`."""
        with open(path, "w") as fh:
            fh.write("alpha,lambda,H\n")
            for a, lam, h in self.entries:
                fh.write(f"{a:.17g},{lam:.17g},{h:.17g}\n")
            a, lam, h = self.best
            fh.write(f"best,{a:.17g},{lam:.17g},{h:.17g}\n")


def default_grid() -> ParamGrid:
    """The 7x7 sweep used throughout: alpha 1.0..3.4 step 0.4, lambda decades 1e-2..1e4."""
    return ParamGrid(
        alphas=tuple(np.round(np.arange(1.0, 3.5, 0.4), 10)),
        lambdas=tuple(10.0**k for k in range(-2, 5)),
    )


def spectrum_probabilities(signal: Signal1D) -> np.ndarray:
    """Min-shift, square, normalize. An all-constant signal (zero mass after
    the shift) maps to the uniform distribution, i.e. maximal entropy."""
    shifted = signal.intensity - signal.intensity.min()
    mass = shifted**2
    total = mass.sum()
    if total == 0.0:
        return np.full(len(signal), 1.0 / len(signal))
    return mass / total


def shannon_entropy(p) -> float:
    """Entropy in bits; zero-probability terms contribute nothing."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > PROB_SUM_TOL:
        raise ValueError(f"probabilities sum to {p.sum()}, not 1")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def _histogram_probabilities(plane: ImagePlane, bins: int = 256) -> np.ndarray:
    """Occupancy of `bins` equal intensity levels over the clipped [0, 1] range."""
    q = np.clip(plane.values, 0.0, 1.0)
    idx = np.minimum((q * bins).astype(np.int64), bins - 1)
    counts = np.bincount(idx.ravel(), minlength=bins)
    return counts / counts.sum()


def _pixel_mass_probabilities(plane: ImagePlane) -> np.ndarray:
    """Literal per-pixel mass P_k = I_k / sum(I); alternative entropy mode."""
    v = plane.values.ravel()
    if np.any(v < 0):
        raise ValueError("pixel-mass probabilities require non-negative intensities")
    total = v.sum()
    if total == 0.0:
        return np.full(v.size, 1.0 / v.size)
    return v / total


def channel_entropies(image: RgbImage, mode: str = "histogram"):
    """Per-channel entropy (H_R, H_G, H_B) in bits."""
    if mode == "histogram":
        prob = _histogram_probabilities
    elif mode == "pixel-mass":
        prob = _pixel_mass_probabilities
    else:
        raise ValueError(f"unknown entropy mode {mode!r}")
    return tuple(shannon_entropy(prob(plane)) for plane in image.planes)


def image_entropy(image: RgbImage, mode: str = "histogram") -> float:
    """Summed channel entropy H_R + H_G + H_B."""
    return float(sum(channel_entropies(image, mode=mode)))


def _entropy_of_filtered(target, params: FilterParams) -> float:
    if isinstance(target, Signal1D):
        return shannon_entropy(spectrum_probabilities(filter_1d(target, params)))
    if isinstance(target, RgbImage):
        return image_entropy(filter_rgb(target, params))
    if isinstance(target, ImagePlane):
        plane = filter_2d(target, params)
        return shannon_entropy(_histogram_probabilities(plane))
    raise ValueError(f"cannot optimize over {type(target).__name__}")


def optimize(target, grid: ParamGrid) -> EntropySurface:
    """Evaluate H over every (alpha, lambda) cell and return the argmin.

    The surface is recorded in row-major (alpha outer, lambda inner) order;
    the winner is independent of evaluation order because ties break by
    (H, lambda, alpha).
    """
    entries = []
    for alpha in grid.alphas:
        for lam in grid.lambdas:
            try:
                h = _entropy_of_filtered(target, FilterParams(alpha=alpha, lam=lam))
            except Exception as exc:
                raise RuntimeError(f"filter failed at alpha={alpha}, lambda={lam}: {exc}") from exc
            entries.append((alpha, lam, h))
    best = min(entries, key=lambda e: (e[2], e[1], e[0]))
    return EntropySurface(entries=tuple(entries), best=best)
