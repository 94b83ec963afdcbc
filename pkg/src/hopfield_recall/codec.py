"""Binary bitmaps, their bipolar encoding, and plain (ASCII ``P1``) PBM files.

Polarity follows PBM: pixel 1 is black and maps to +1, pixel 0 is white and
maps to -1. Pixels are flattened row-major.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .core import BipolarPattern
from .errors import (
    BadMagic,
    DimensionMismatch,
    InvalidPixelValue,
    MalformedHeader,
    PixelCountMismatch,
)

__all__ = [
    "MAX_DIMENSION",
    "Bitmap",
    "bitmap_to_pattern",
    "pattern_to_bitmap",
    "read_pbm",
    "write_pbm",
    "load_pbm",
    "save_pbm",
]

MAX_DIMENSION = 4096

_COMMENT = re.compile(rb"#[^\r\n]*")


@dataclass(frozen=True, eq=False)
class Bitmap:
    """A width x height binary image, pixels stored row-major as ``uint8``."""

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        for name in ("width", "height"):
            v = getattr(self, name)
            if not 1 <= v <= MAX_DIMENSION:
                raise DimensionMismatch(f"{name} {v} outside [1, {MAX_DIMENSION}]")
        px = np.asarray(self.pixels).reshape(-1)
        if px.size != self.width * self.height:
            raise DimensionMismatch(
                f"{px.size} pixels for a {self.width}x{self.height} bitmap"
            )
        if np.any((px != 0) & (px != 1)):
            raise InvalidPixelValue("pixels must be 0 or 1")
        px = px.astype(np.uint8)
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    def to_array(self) -> np.ndarray:
        """Pixels as a ``(height, width)`` array (a copy)."""
        return self.pixels.reshape(self.shape).copy()

    @classmethod
    def from_array(cls, a) -> "Bitmap":
        a = np.asarray(a)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {a.shape}")
        return cls(a.shape[1], a.shape[0], a.reshape(-1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bitmap):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )

    def __hash__(self) -> int:
        return hash((self.width, self.height, self.pixels.tobytes()))


def bitmap_to_pattern(b: Bitmap) -> BipolarPattern:
    return BipolarPattern._trusted(2 * b.pixels.astype(np.int8) - 1)


def pattern_to_bitmap(x: BipolarPattern, width: int, height: int) -> Bitmap:
    if len(x) != width * height:
        raise DimensionMismatch(f"pattern of length {len(x)} cannot fill {width}x{height}")
    return Bitmap(width, height, (x.values > 0).astype(np.uint8))


def read_pbm(data: bytes) -> Bitmap:
    """Parse a plain PBM (``P1``) image.

    ``#`` comments run to end of line. The raster may use any whitespace
    layout, including none between digits.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    if data[:2] != b"P1":
        raise BadMagic(f"expected magic b'P1', got {data[:2]!r}")
    body = data[2:]
    if body and not body[:1].isspace() and body[:1] != b"#":
        raise BadMagic(f"expected whitespace after magic, got {data[:3]!r}")
    body = _COMMENT.sub(b"", body)

    tokens = body.split(maxsplit=2)
    if len(tokens) < 2:
        raise MalformedHeader("missing width/height")
    dims = []
    for name, tok in zip(("width", "height"), tokens[:2]):
        if not tok.isdigit():
            raise MalformedHeader(f"{name} {tok!r} is not a positive integer")
        v = int(tok)
        if not 1 <= v <= MAX_DIMENSION:
            raise MalformedHeader(f"{name} {v} outside [1, {MAX_DIMENSION}]")
        dims.append(v)
    width, height = dims

    raster = b"".join(tokens[2].split()) if len(tokens) > 2 else b""
    digits = np.frombuffer(raster, dtype=np.uint8)
    bad = (digits != ord("0")) & (digits != ord("1"))
    if bad.any():
        c = bytes(digits[bad][:1])
        raise InvalidPixelValue(f"invalid pixel character {c!r}")
    if digits.size != width * height:
        raise PixelCountMismatch(
            f"{digits.size} pixels for a {width}x{height} image"
        )
    return Bitmap(width, height, digits - ord("0"))


def write_pbm(b: Bitmap) -> bytes:
    """Serialize in canonical form: one image row per line, space separated."""
    rows = b.pixels.reshape(b.shape)
    lines = [b"P1", f"{b.width} {b.height}".encode()]
    lines += [b" ".join(b"1" if p else b"0" for p in row) for row in rows]
    return b"\n".join(lines) + b"\n"


def load_pbm(path) -> Bitmap:
    with open(path, "rb") as f:
        return read_pbm(f.read())


def save_pbm(b: Bitmap, path) -> None:
    with open(path, "wb") as f:
        f.write(write_pbm(b))
