"""File I/O: two-column spectrum CSVs, 8-bit PNG images, metadata sidecars.

Spectrum CSVs use the header `nu,intensity`; lines starting with `#` are
comments. Values are written with 17 significant digits so a write/read
round trip is exact to double precision. Images are mapped to [0, 1] on
ingestion (divide by 255) and clamped back to 8 bits on output.

Every output file gets a `<name>.meta` sidecar listing the tool version,
command, parameters, and seed needed to reproduce the run.
"""

import numpy as np
from PIL import Image, UnidentifiedImageError

from . import __version__
from .spectral import ImagePlane, RgbImage, Signal1D


def write_spectrum_csv(path, signal: Signal1D):
    with open(path, "w") as fh:
        fh.write("nu,intensity\n")
        for nu, intensity in zip(signal.nu, signal.intensity):
            fh.write(f"{nu:.17g},{intensity:.17g}\n")


def read_spectrum_csv(path) -> Signal1D:
    nus, intensities = [], []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if lineno == 1 or line == "nu,intensity":
                if line.replace(" ", "") == "nu,intensity":
                    continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 columns, got {len(parts)}")
            try:
                nus.append(float(parts[0]))
                intensities.append(float(parts[1]))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric value in {line!r}") from None
    if len(nus) < 2:
        raise ValueError(f"{path}: fewer than 2 data rows")
    return Signal1D(np.array(nus), np.array(intensities))


def read_image_png(path) -> RgbImage:
    """Load an 8-bit RGB or grayscale PNG, scaling intensities to [0, 1].

    Grayscale images are replicated across the three channels.
    """
    try:
        img = Image.open(path)
    except UnidentifiedImageError:
        raise ValueError(f"{path}: not a recognized image file") from None
    if img.mode == "L":
        img = img.convert("RGB")
    if img.mode != "RGB":
        raise ValueError(f"{path}: unsupported image mode {img.mode!r}; need 8-bit RGB or grayscale")
    arr = np.asarray(img, dtype=float) / 255.0
    return RgbImage(*(ImagePlane(arr[:, :, c]) for c in range(3)))


def write_image_png(path, image: RgbImage):
    """Clamp to [0, 1], quantize to 8 bits, and save as RGB PNG."""
    stack = np.stack([p.values for p in image.planes], axis=-1)
    quantized = np.round(np.clip(stack, 0.0, 1.0) * 255.0).astype(np.uint8)
    Image.fromarray(quantized, mode="RGB").save(path, format="PNG")


def write_meta_sidecar(output_path, command: str, params: dict):
    """Record the run next to its output as `<output>.meta` key = value lines."""
    with open(f"{output_path}.meta", "w") as fh:
        fh.write(f"tool_version = {__version__}\n")
        fh.write(f"command = {command}\n")
        for key in sorted(params):
            fh.write(f"{key} = {params[key]}\n")
