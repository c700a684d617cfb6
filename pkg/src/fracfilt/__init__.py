"""Fractional variational denoising in the Fourier domain.

Low-pass filtering of 1D spectra and RGB images with the transfer function
1/(1 + lambda*|omega|^(2*alpha)), plus synthetic Raman spectrum generation,
Shannon-entropy-driven selection of (alpha, lambda), and quality metrics.
"""

__version__ = "0.1.0"

from .spectral import (
    FilterParams,
    FrequencyGrid,
    ImagePlane,
    NumericalError,
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
from .synth import (
    NoiseSpec,
    PeakSpec,
    SimulationRecipe,
    gaussian,
    lorentzian,
    paper_recipe,
    pseudo_voigt,
    simulate,
)
from .entropy import (
    EntropySurface,
    ParamGrid,
    channel_entropies,
    image_entropy,
    optimize,
    shannon_entropy,
    spectrum_probabilities,
)
from .metrics import (
    PeakWindow,
    contrast,
    gradient_norm_1d,
    peak_area,
    peak_position,
    rmse,
    sharpness,
)
