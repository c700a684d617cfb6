import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fracfilt import PeakWindow, Signal1D
from fracfilt.synth import add_image_noise, paper_recipe, simulate, smooth_rgb_image


@pytest.fixture(scope="session")
def paper_signals():
    """(clean, noisy) pair from the default two-peak recipe, seed 42."""
    return simulate(paper_recipe())


@pytest.fixture(scope="session")
def first_peak_window():
    return PeakWindow(lo=760.0, hi=825.0)


@pytest.fixture(scope="session")
def image_pair():
    """(clean, noisy) 256x256 RGB pair; Gaussian noise with variance 0.01."""
    clean = smooth_rgb_image(256, seed=7)
    return clean, add_image_noise(clean, sigma=0.1, seed=42)


@pytest.fixture()
def random_signal():
    rng = np.random.default_rng(123)
    return Signal1D(np.arange(64) * 0.5, rng.normal(size=64))
