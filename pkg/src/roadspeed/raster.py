"""Raster image I/O and greyscale conversion.

Frames are plain numpy arrays: uint8, shape (height, width, 3), RGB channel
order.  PPM (binary P6) is the native interchange format; PNG goes through
Pillow.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ShapeError

__all__ = ["write_ppm", "read_ppm", "write_png", "read_png", "read_image", "write_image", "to_grey"]


def _check_rgb(image: np.ndarray) -> np.ndarray:
    arr = np.asarray(image)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ShapeError(f"expected (h, w, 3) RGB image, got shape {arr.shape}")
    return arr.astype(np.uint8, copy=False)


def write_ppm(path, image: np.ndarray) -> None:
    arr = _check_rgb(image)
    h, w = arr.shape[:2]
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def read_ppm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if not data.startswith(b"P6"):
        raise ValueError(f"{path}: not a binary PPM (P6) file")
    # Header: magic, width, height, maxval; '#' comments may appear anywhere.
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace after maxval
    w, h, maxval = fields
    if maxval != 255:
        raise ValueError(f"{path}: only maxval 255 is supported, got {maxval}")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h * 3, offset=pos)
    return pixels.reshape(h, w, 3).copy()


def write_png(path, image: np.ndarray) -> None:
    from PIL import Image

    Image.fromarray(_check_rgb(image), mode="RGB").save(path, format="PNG")


def read_png(path) -> np.ndarray:
    from PIL import Image

    with Image.open(path) as im:
        return np.asarray(im.convert("RGB"), dtype=np.uint8).copy()


def read_image(path) -> np.ndarray:
    suffix = Path(path).suffix.lower()
    if suffix == ".ppm":
        return read_ppm(path)
    if suffix == ".png":
        return read_png(path)
    raise ValueError(f"{path}: unsupported image format {suffix!r} (use .ppm or .png)")


def write_image(path, image: np.ndarray) -> None:
    suffix = Path(path).suffix.lower()
    if suffix == ".ppm":
        write_ppm(path, image)
    elif suffix == ".png":
        write_png(path, image)
    else:
        raise ValueError(f"{path}: unsupported image format {suffix!r} (use .ppm or .png)")


def to_grey(image: np.ndarray) -> np.ndarray:
    """Rec. 601 luma as float64 in [0, 255]; greyscale input passes through."""
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim == 2:
        return arr
    if arr.ndim == 3 and arr.shape[2] == 3:
        return arr[..., 0] * 0.299 + arr[..., 1] * 0.587 + arr[..., 2] * 0.114
    raise ShapeError(f"expected (h, w) grey or (h, w, 3) RGB image, got shape {arr.shape}")
