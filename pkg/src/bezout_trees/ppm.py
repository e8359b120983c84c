"""Binary PPM output and PPM (P3/P6) colormap input."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image


def encode_ppm(img: np.ndarray) -> bytes:
    img = np.ascontiguousarray(img, dtype=np.uint8)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected an (h, w, 3) array, got shape {img.shape}")
    h, w = img.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + img.tobytes()


def write_ppm(path, img: np.ndarray) -> None:
    Path(path).write_bytes(encode_ppm(img))


def read_ppm(path) -> np.ndarray:
    with Image.open(path) as im:
        if im.format != "PPM":
            raise ValueError(f"{path} is not a PPM file")
        return np.asarray(im.convert("RGB"), dtype=np.uint8).copy()
