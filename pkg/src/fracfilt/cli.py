"""Command-line front end.

Verbs: simulate, filter1d, filter2d, optimize, metrics. Options can come
from flags or from a plain-text `key = value` config file (--config);
flags override the file. Exit codes: 0 success, 2 invalid arguments,
3 I/O failure, 4 numerical failure.
"""

import argparse
import os
import sys

from . import __version__
from .entropy import (
    ParamGrid,
    channel_entropies,
    default_grid,
    image_entropy,
    optimize,
    shannon_entropy,
    spectrum_probabilities,
)
from .io import (
    read_image_png,
    read_spectrum_csv,
    write_image_png,
    write_meta_sidecar,
    write_spectrum_csv,
)
from .metrics import PeakWindow, contrast, gradient_norm_1d, peak_area, peak_position, sharpness
from .spectral import FilterParams, NumericalError, filter_1d, filter_rgb
from .synth import NoiseSpec, PeakSpec, SimulationRecipe, paper_recipe, simulate

DEFAULT_WINDOW = "760:825"

# Keys recognized in config files; identical to the long flag names.
CONFIG_KEYS = {
    "in", "out", "alpha", "lambda", "alpha-grid", "lambda-grid", "seed", "sigma",
    "window", "mu", "baseline", "grid-start", "grid-step", "n-points", "peaks",
}


def read_config(path) -> dict:
    """Parse `key = value` lines; `#` starts a comment, blank lines ignored."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def _merged(args, key, default=None):
    """Flag value if given, else config-file value, else default."""
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    return args.config_values.get(key, default)


def parse_window(text: str) -> PeakWindow:
    try:
        lo, hi = (float(part) for part in text.split(":"))
    except ValueError:
        raise ValueError(f"window must be LO:HI, got {text!r}") from None
    return PeakWindow(lo=lo, hi=hi)


def parse_value_list(text) -> tuple:
    if not isinstance(text, str):
        return tuple(text)
    values = tuple(float(v) for v in text.split(",") if v.strip())
    if not values:
        raise ValueError("empty value list")
    return values


def parse_peaks(text: str) -> tuple:
    """Peaks as `center:amplitude:gamma:eta` groups separated by commas."""
    peaks = []
    for group in text.split(","):
        fields = group.split(":")
        if len(fields) != 4:
            raise ValueError(f"peak spec must be center:amplitude:gamma:eta, got {group!r}")
        c, a, g, e = (float(f) for f in fields)
        peaks.append(PeakSpec(center=c, amplitude=a, gamma=g, eta=e))
    return tuple(peaks)


def _param_grid(args) -> ParamGrid:
    alpha_grid = _merged(args, "alpha-grid")
    lambda_grid = _merged(args, "lambda-grid")
    base = default_grid()
    return ParamGrid(
        alphas=parse_value_list(alpha_grid) if alpha_grid is not None else base.alphas,
        lambdas=parse_value_list(lambda_grid) if lambda_grid is not None else base.lambdas,
    )


def _filter_params(args) -> FilterParams:
    alpha = _merged(args, "alpha")
    lam = _merged(args, "lambda")
    if alpha is None or lam is None:
        raise ValueError("--alpha and --lambda are required")
    return FilterParams(alpha=float(alpha), lam=float(lam))


def _require_in(args) -> str:
    path = _merged(args, "in")
    if path is None:
        raise ValueError("--in is required")
    return path


def _spectrum_entropy(signal) -> float:
    return shannon_entropy(spectrum_probabilities(signal))


def cmd_simulate(args) -> int:
    base = paper_recipe()
    sigma = float(_merged(args, "sigma", 0.02))
    seed = int(_merged(args, "seed", 42))
    peaks_text = _merged(args, "peaks")
    recipe = SimulationRecipe(
        grid_start=float(_merged(args, "grid-start", base.grid_start)),
        grid_step=float(_merged(args, "grid-step", base.grid_step)),
        n_points=int(_merged(args, "n-points", base.n_points)),
        peaks=parse_peaks(peaks_text) if peaks_text is not None else base.peaks,
        baseline=float(_merged(args, "baseline", 0.0)),
        noise=NoiseSpec(sigma=sigma, mu=float(_merged(args, "mu", 0.0)), seed=seed),
    )
    out_dir = _merged(args, "out", ".")
    os.makedirs(out_dir, exist_ok=True)
    clean, noisy = simulate(recipe)
    meta = {
        "grid_start": recipe.grid_start,
        "grid_step": recipe.grid_step,
        "n_points": recipe.n_points,
        "peaks": ",".join(
            f"{p.center}:{p.amplitude}:{p.gamma}:{p.eta}" for p in recipe.peaks
        ),
        "baseline": recipe.baseline,
        "mu": recipe.noise.mu,
        "sigma": recipe.noise.sigma,
        "seed": recipe.noise.seed,
        "noise_generator": "numpy.random.default_rng (PCG64)",
    }
    for name, signal in (("clean.csv", clean), ("noisy.csv", noisy)):
        path = os.path.join(out_dir, name)
        write_spectrum_csv(path, signal)
        write_meta_sidecar(path, "simulate", meta)
        print(f"wrote {path}")
    return 0


def cmd_filter1d(args) -> int:
    in_path = _require_in(args)
    out_path = _merged(args, "out")
    if out_path is None:
        raise ValueError("--out is required")
    params = _filter_params(args)
    signal = read_spectrum_csv(in_path)
    filtered = filter_1d(signal, params)
    write_spectrum_csv(out_path, filtered)
    write_meta_sidecar(out_path, "filter1d", {
        "in": in_path, "alpha": params.alpha, "lambda": params.lam,
    })
    print(f"gradient_norm before = {gradient_norm_1d(signal):.6g}")
    print(f"gradient_norm after  = {gradient_norm_1d(filtered):.6g}")
    window_text = _merged(args, "window")
    if window_text is not None:
        window = parse_window(window_text)
        print(f"peak_position = {peak_position(filtered, window):.6g}")
        print(f"peak_area = {peak_area(filtered, window):.6g}")
    print(f"wrote {out_path}")
    return 0


def cmd_filter2d(args) -> int:
    in_path = _require_in(args)
    out_path = _merged(args, "out")
    if out_path is None:
        raise ValueError("--out is required")
    params = _filter_params(args)
    image = read_image_png(in_path)
    filtered = filter_rgb(image, params)
    write_image_png(out_path, filtered)
    write_meta_sidecar(out_path, "filter2d", {
        "in": in_path, "alpha": params.alpha, "lambda": params.lam,
    })
    for label, img in (("before", image), ("after", filtered)):
        mean_contrast = sum(contrast(p) for p in img.planes) / 3.0
        mean_sharpness = sum(sharpness(p) for p in img.planes) / 3.0
        print(f"contrast {label} = {mean_contrast:.6g}")
        print(f"sharpness {label} = {mean_sharpness:.6g}")
        print(f"entropy {label} = {image_entropy(img):.6g}")
    print(f"wrote {out_path}")
    return 0


def cmd_optimize(args) -> int:
    in_path = _require_in(args)
    out_dir = _merged(args, "out", ".")
    os.makedirs(out_dir, exist_ok=True)
    grid = _param_grid(args)
    is_image = in_path.lower().endswith(".png")
    target = read_image_png(in_path) if is_image else read_spectrum_csv(in_path)
    surface = optimize(target, grid)
    alpha, lam, h = surface.best
    surface_path = os.path.join(out_dir, "surface.csv")
    surface.to_csv(surface_path)
    meta = {
        "in": in_path,
        "alpha_grid": ",".join(str(a) for a in grid.alphas),
        "lambda_grid": ",".join(str(l) for l in grid.lambdas),
        "best_alpha": alpha, "best_lambda": lam, "best_H": h,
    }
    write_meta_sidecar(surface_path, "optimize", meta)
    params = FilterParams(alpha=alpha, lam=lam)
    if is_image:
        best_path = os.path.join(out_dir, "filtered.png")
        write_image_png(best_path, filter_rgb(target, params))
    else:
        best_path = os.path.join(out_dir, "filtered.csv")
        write_spectrum_csv(best_path, filter_1d(target, params))
    write_meta_sidecar(best_path, "optimize", meta)
    print(f"best alpha = {alpha:g}")
    print(f"best lambda = {lam:g}")
    print(f"best H = {h:.6g}")
    print(f"wrote {surface_path}")
    print(f"wrote {best_path}")
    return 0


def _metrics_rows_1d(signal, grid, window):
    rows = []
    for alpha in grid.alphas:
        for lam in grid.lambdas:
            filtered = filter_1d(signal, FilterParams(alpha=alpha, lam=lam))
            rows.append((
                peak_area(filtered, window),
                peak_position(filtered, window),
                gradient_norm_1d(filtered),
                _spectrum_entropy(filtered),
                alpha,
                lam,
            ))
    return "area,position,dfnorm,H,alpha,lambda", rows


def _metrics_rows_2d(image, grid):
    rows = []
    for alpha in grid.alphas:
        for lam in grid.lambdas:
            filtered = filter_rgb(image, FilterParams(alpha=alpha, lam=lam))
            mean_contrast = sum(contrast(p) for p in filtered.planes) / 3.0
            mean_sharpness = sum(sharpness(p) for p in filtered.planes) / 3.0
            rows.append((mean_contrast, mean_sharpness, image_entropy(filtered), alpha, lam))
    return "contrast,sharpness,H,alpha,lambda", rows


def cmd_metrics(args) -> int:
    in_path = _require_in(args)
    grid = _param_grid(args)
    if in_path.lower().endswith(".png"):
        header, rows = _metrics_rows_2d(read_image_png(in_path), grid)
    else:
        window = parse_window(_merged(args, "window", DEFAULT_WINDOW))
        header, rows = _metrics_rows_1d(read_spectrum_csv(in_path), grid, window)
    lines = [header] + [",".join(f"{v:.17g}" for v in row) for row in rows]
    out_path = _merged(args, "out")
    if out_path is None:
        print("\n".join(lines))
    else:
        with open(out_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        write_meta_sidecar(out_path, "metrics", {
            "in": in_path,
            "alpha_grid": ",".join(str(a) for a in grid.alphas),
            "lambda_grid": ",".join(str(l) for l in grid.lambdas),
        })
        print(f"wrote {out_path}")
    return 0


COMMANDS = {
    "simulate": cmd_simulate,
    "filter1d": cmd_filter1d,
    "filter2d": cmd_filter2d,
    "optimize": cmd_optimize,
    "metrics": cmd_metrics,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracfilt",
        description="Fractional variational Fourier-domain denoising toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("simulate", "generate clean and noisy synthetic spectra"),
        ("filter1d", "filter a spectrum CSV"),
        ("filter2d", "filter a PNG image"),
        ("optimize", "grid-search (alpha, lambda) by entropy minimization"),
        ("metrics", "emit the metric table for a parameter sweep"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="in_", metavar="PATH")
        p.add_argument("--out")
        p.add_argument("--alpha", type=float)
        p.add_argument("--lambda", dest="lambda_", type=float)
        p.add_argument("--alpha-grid")
        p.add_argument("--lambda-grid")
        p.add_argument("--seed", type=int)
        p.add_argument("--sigma", type=float)
        p.add_argument("--mu", type=float)
        p.add_argument("--baseline", type=float)
        p.add_argument("--grid-start", type=float)
        p.add_argument("--grid-step", type=float)
        p.add_argument("--n-points", type=int)
        p.add_argument("--peaks")
        p.add_argument("--window", metavar="LO:HI")
        p.add_argument("--config", metavar="PATH")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # Normalize reserved-word flag names to the config-key spelling.
    args.__dict__["in"] = args.in_
    args.__dict__["lambda"] = args.lambda_
    try:
        args.config_values = read_config(args.config) if args.config else {}
        return COMMANDS[args.command](args)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
