"""Text serialization of a trained weight matrix.

Layout::

    HOPFIELD 1
    n <dim> patterns <count>
    <n lines of n space-separated integers, the rows of W>
"""

from __future__ import annotations

import numpy as np

from .core import WeightMatrix
from .errors import HopfieldError, MalformedMemoryFile

MAGIC = "HOPFIELD 1"


def write_memory(w: WeightMatrix) -> bytes:
    lines = [MAGIC, f"n {w.n} patterns {w.pattern_count}"]
    lines += [" ".join(str(int(v)) for v in row) for row in w.entries]
    return ("\n".join(lines) + "\n").encode("ascii")


def read_memory(data: bytes) -> WeightMatrix:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        raise MalformedMemoryFile(f"memory file is not ASCII: {e}") from None
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise MalformedMemoryFile(f"expected first line {MAGIC!r}")
    head = lines[1].split() if len(lines) > 1 else []
    if len(head) != 4 or head[0] != "n" or head[2] != "patterns":
        raise MalformedMemoryFile("expected 'n <dim> patterns <count>' on line 2")
    try:
        n, count = int(head[1]), int(head[3])
    except ValueError:
        raise MalformedMemoryFile("dimension and pattern count must be integers") from None
    rows = [ln for ln in lines[2:] if ln.strip()]
    if n < 1 or len(rows) != n:
        raise MalformedMemoryFile(f"expected {n} weight rows, found {len(rows)}")
    try:
        entries = np.array([[int(t) for t in r.split()] for r in rows], dtype=np.int64)
    except ValueError:
        raise MalformedMemoryFile("weight rows must hold integers") from None
    if entries.shape != (n, n):
        raise MalformedMemoryFile(f"weight rows do not form a {n}x{n} matrix")
    try:
        return WeightMatrix(entries, pattern_count=count)
    except HopfieldError as e:
        raise MalformedMemoryFile(f"invalid weights: {e}") from None


def load_memory(path) -> WeightMatrix:
    with open(path, "rb") as f:
        return read_memory(f.read())


def save_memory(w: WeightMatrix, path) -> None:
    with open(path, "wb") as f:
        f.write(write_memory(w))
