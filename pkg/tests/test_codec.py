import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfield_recall import Bitmap, bitmap_to_pattern, make_pattern, pattern_to_bitmap, read_pbm, write_pbm
from hopfield_recall.codec import MAX_DIMENSION, load_pbm
from hopfield_recall.errors import (
    BadMagic,
    DimensionMismatch,
    InvalidPixelValue,
    MalformedHeader,
    PixelCountMismatch,
)


@st.composite
def bitmaps(draw, max_side=12):
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    px = draw(st.lists(st.integers(0, 1), min_size=w * h, max_size=w * h))
    return Bitmap(w, h, px)


def test_bitmap_validation():
    with pytest.raises(DimensionMismatch):
        Bitmap(2, 2, [1, 0, 1])
    with pytest.raises(InvalidPixelValue):
        Bitmap(2, 1, [1, 2])
    with pytest.raises(DimensionMismatch):
        Bitmap(0, 1, [])
    with pytest.raises(DimensionMismatch):
        Bitmap(MAX_DIMENSION + 1, 1, [0] * (MAX_DIMENSION + 1))


def test_bitmap_from_array_layout():
    b = Bitmap.from_array([[1, 0, 0], [0, 1, 1]])
    assert (b.width, b.height) == (3, 2)
    assert b.pixels.tolist() == [1, 0, 0, 0, 1, 1]
    assert b.to_array().tolist() == [[1, 0, 0], [0, 1, 1]]


def test_bitmap_to_pattern_examples():
    assert bitmap_to_pattern(Bitmap(2, 1, [1, 0])).tolist() == [1, -1]
    assert bitmap_to_pattern(Bitmap(3, 2, [1] * 6)).tolist() == [1] * 6


def test_pattern_to_bitmap_examples():
    assert pattern_to_bitmap(make_pattern([1, -1]), 2, 1) == Bitmap(2, 1, [1, 0])
    with pytest.raises(DimensionMismatch):
        pattern_to_bitmap(make_pattern([1] * 6), 4, 2)


@given(bitmaps())
def test_pattern_bijection(b):
    x = bitmap_to_pattern(b)
    assert len(x) == b.width * b.height
    assert pattern_to_bitmap(x, b.width, b.height) == b


def test_read_minimal():
    b = read_pbm(b"P1\n2 1\n1 0\n")
    assert (b.width, b.height) == (2, 1)
    assert b.pixels.tolist() == [1, 0]


@pytest.mark.parametrize(
    "data, exc",
    [
        (b"P4\n2 1\n\x80", BadMagic),
        (b"P2\n2 1\n1 0\n", BadMagic),
        (b"", BadMagic),
        (b"P12 1\n1 0\n", BadMagic),
        (b"P1\n2 2\n1 0 1\n", PixelCountMismatch),
        (b"P1\n2 1\n1 0 1\n", PixelCountMismatch),
        (b"P1\n2\n", MalformedHeader),
        (b"P1\nx 1\n1\n", MalformedHeader),
        (b"P1\n0 1\n", MalformedHeader),
        (b"P1\n-2 1\n1 0\n", MalformedHeader),
        (b"P1\n5000 1\n", MalformedHeader),
        (b"P1\n2 1\n1 2\n", InvalidPixelValue),
    ],
)
def test_read_errors(data, exc):
    with pytest.raises(exc):
        read_pbm(data)


def test_read_comments_and_odd_whitespace():
    data = b"P1\n# made by hand\n3 # width\n2\n1 0\n1\n\n  0 1\t1 \n\n"
    assert read_pbm(data) == Bitmap(3, 2, [1, 0, 1, 0, 1, 1])


def test_read_packed_raster():
    assert read_pbm(b"P1 3 2 101011") == Bitmap(3, 2, [1, 0, 1, 0, 1, 1])


def test_read_accepts_str():
    assert read_pbm("P1\n1 1\n1\n") == Bitmap(1, 1, [1])


@pytest.mark.parametrize(
    "bitmap, expected",
    [
        (Bitmap(2, 1, [1, 0]), b"P1\n2 1\n1 0\n"),
        (Bitmap(1, 1, [0]), b"P1\n1 1\n0\n"),
        (Bitmap(2, 2, [1, 1, 0, 1]), b"P1\n2 2\n1 1\n0 1\n"),
    ],
)
def test_write_canonical(bitmap, expected):
    assert write_pbm(bitmap) == expected


@given(bitmaps())
def test_write_read_round_trip(b):
    assert read_pbm(write_pbm(b)) == b


@given(bitmaps(), st.randoms())
def test_rewrapped_file_parses_to_same_bitmap(b, r):
    canonical = write_pbm(b)
    digits = [c for c in canonical.split(b"\n", 2)[2] if c in b"01"]
    wrapped = bytearray(b"P1\n# rewrapped\n" + f"{b.width}\n{b.height}".encode() + b"\n")
    for d in digits:
        wrapped.append(d)
        wrapped += r.choice([b"", b" ", b"\n", b"\t", b"  \r\n"])
    parsed = read_pbm(bytes(wrapped))
    assert parsed == b
    assert write_pbm(parsed) == canonical


def test_fixtures_are_canonical(glyph_paths):
    for path in glyph_paths:
        data = path.read_bytes()
        b = load_pbm(path)
        assert (b.width, b.height) == (16, 16)
        assert write_pbm(b) == data


def test_bitmap_is_immutable():
    b = Bitmap(2, 1, np.array([1, 0]))
    with pytest.raises(ValueError):
        b.pixels[0] = 0
