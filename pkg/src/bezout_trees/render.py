"""Hyperbolic wallpaper rendering by finite Mobius sums over coprime pairs.

Each tree node (c, d) with Bezout pair (u, v) (c*u + d*v == 1) gives the
integer map z -> (a z + b) / (c z + d) with a = v, b = -u, so that
a*d - b*c == 1.  A pixel's value is the sum of a motif h over the images
of its center under every map, then looked up on a colormap treated as
the unit torus.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import forest
from .pair_core import checked
from .ppm import read_ppm, write_ppm

MOTIFS = ("exp", "identity")
SENTINEL = np.array([0, 0, 0], dtype=np.uint8)


@dataclass(frozen=True, order=True)
class MobiusMap:
    c: int
    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        return apply_map(self, z)


IDENTITY = MobiusMap(c=0, d=1, a=1, b=0)
INVERSION = MobiusMap(c=1, d=0, a=0, b=-1)
BASE_TERMS = (IDENTITY, INVERSION, MobiusMap(c=1, d=1, a=1, b=0))


@dataclass(frozen=True)
class RenderConfig:
    window: tuple[float, float, float, float] = (-1.0, 1.0, 0.05, 2.05)
    width: int = 256
    height: int = 256
    term_depth: int = 5
    include_base_terms: bool = False
    include_swapped: bool = False
    motif: str = "exp"
    colormap_source: str = "builtin"
    color_scale: float = 1.0
    output: str | None = None

    def __post_init__(self):
        x0, x1, y0, y1 = self.window
        if not (x0 < x1 and 0 < y0 < y1):
            raise ValueError(f"bad window {self.window}: need x_min<x_max and 0<y_min<y_max")
        if self.width < 1 or self.height < 1:
            raise ValueError("image size must be positive")
        if self.term_depth < 0:
            raise ValueError("term_depth must be >= 0")
        if self.motif not in MOTIFS:
            raise ValueError(f"motif must be one of {MOTIFS}")


# 256x256 with exp motif and the builtin wheel; its checksum is a golden test.
REFERENCE_CONFIG = RenderConfig()


def build_terms(cfg: RenderConfig) -> list[MobiusMap]:
    terms = set(BASE_TERMS) if cfg.include_base_terms else set()
    for root in forest.ROOTS:
        for node in forest.enumerate(root, forest.DEFAULT_SEED, cfg.term_depth, include_root=True):
            c, d = node.pair.m, node.pair.n
            u, v = node.bezout.u, node.bezout.v
            terms.add(MobiusMap(c=c, d=d, a=v, b=checked(-u, node.path)))
            if cfg.include_swapped:
                terms.add(MobiusMap(c=d, d=c, a=u, b=checked(-v, node.path)))
    return sorted(terms)


def apply_map(t: MobiusMap, z):
    return (t.a * z + t.b) / (t.c * z + t.d)


def _motif(name: str, w):
    if name == "identity":
        return w
    # exp(2 pi i w) written out in real arithmetic; |result| <= 1 for im(w) > 0.
    two_pi = 2.0 * math.pi
    w = np.asarray(w)
    mag = np.exp(-two_pi * w.imag)
    return mag * np.cos(two_pi * w.real) + 1j * (mag * np.sin(two_pi * w.real))


def eval_sum(terms: Sequence[MobiusMap], motif: str, z):
    """Sum of ``motif(t(z))`` over ``terms`` in the given order.

    ``z`` may be a complex scalar or array; the accumulation order is the
    term order, so each pixel's value does not depend on array layout.
    """
    if not terms:
        raise ValueError("term list is empty")
    if motif not in MOTIFS:
        raise ValueError(f"motif must be one of {MOTIFS}")
    z = np.asarray(z, dtype=np.complex128)
    total = np.zeros_like(z)
    for t in terms:
        total = total + _motif(motif, apply_map(t, z))
    return total[()] if total.ndim == 0 else total


def builtin_wheel(size: int = 256) -> np.ndarray:
    """Hue runs along columns, value ramps down the rows; texel (0, 0) is pure red."""
    from matplotlib.colors import hsv_to_rgb

    hue = np.arange(size) / size
    ramp = 1.0 - 0.75 * np.arange(size) / size
    hsv = np.empty((size, size, 3))
    hsv[..., 0] = hue[None, :]
    hsv[..., 1] = 1.0
    hsv[..., 2] = ramp[:, None]
    return np.round(hsv_to_rgb(hsv) * 255).astype(np.uint8)


def load_colormap(source: str) -> np.ndarray:
    if source == "builtin":
        return builtin_wheel()
    return read_ppm(source)


def colorize(F, colormap: np.ndarray, scale: float = 1.0) -> np.ndarray:
    """Nearest-texel lookup at (frac(re F), frac(im F)); non-finite values map to black."""
    F = np.asarray(F, dtype=np.complex128)
    h, w = colormap.shape[:2]
    finite = np.isfinite(F)
    safe = np.where(finite, F, 0)
    fx = np.mod(scale * safe.real, 1.0)
    fy = np.mod(scale * safe.imag, 1.0)
    col = np.minimum((fx * w).astype(np.int64), w - 1)
    row = np.minimum((fy * h).astype(np.int64), h - 1)
    rgb = colormap[row, col]
    return np.where(finite[..., None], rgb, SENTINEL)


def pixel_centers(cfg: RenderConfig, rows: range | None = None) -> np.ndarray:
    """Complex pixel centers, row 0 at the top (largest imaginary part)."""
    x0, x1, y0, y1 = cfg.window
    rows = range(cfg.height) if rows is None else rows
    xs = x0 + (np.arange(cfg.width) + 0.5) * ((x1 - x0) / cfg.width)
    ys = y1 - (np.asarray(rows, dtype=np.float64) + 0.5) * ((y1 - y0) / cfg.height)
    return xs[None, :] + 1j * ys[:, None]


def render(cfg: RenderConfig, threads: int = 1, terms: Sequence[MobiusMap] | None = None) -> np.ndarray:
    """Render ``cfg`` to an (height, width, 3) uint8 array.

    Rows are split into blocks evaluated on ``threads`` workers; the output
    is independent of the split.
    """
    terms = build_terms(cfg) if terms is None else terms
    cmap = load_colormap(cfg.colormap_source)
    out = np.empty((cfg.height, cfg.width, 3), dtype=np.uint8)
    threads = max(1, threads)
    bounds = np.linspace(0, cfg.height, min(threads * 4, cfg.height) + 1).astype(int)

    def work(lo, hi):
        z = pixel_centers(cfg, range(lo, hi))
        out[lo:hi] = colorize(eval_sum(terms, cfg.motif, z), cmap, cfg.color_scale)

    blocks = [(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    if threads == 1:
        for lo, hi in blocks:
            work(lo, hi)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for f in [pool.submit(work, lo, hi) for lo, hi in blocks]:
                f.result()
    return out


def render_to_file(cfg: RenderConfig, path: str | Path | None = None, threads: int = 1) -> Path:
    path = Path(path or cfg.output or "wallpaper.ppm")
    write_ppm(path, render(cfg, threads=threads))
    return path
