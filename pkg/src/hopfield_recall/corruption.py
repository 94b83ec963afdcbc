"""Seeded generators of degraded probes.

Randomness comes from numpy's ``default_rng(seed)`` (the PCG64 bit
generator). Flip positions are ``rng.choice(n, k, replace=False)`` on a fresh
generator per call, so a given ``(pattern, spec)`` always yields the same
probe, on any platform numpy supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import BipolarPattern
from .errors import SpecOutOfRange

__all__ = ["FlipBits", "FlipFraction", "MaskRegion", "CorruptionSpec", "corrupt", "flip_count"]


@dataclass(frozen=True)
class FlipBits:
    """Negate exactly ``count`` distinct units chosen uniformly at random."""

    count: int


@dataclass(frozen=True)
class FlipFraction:
    """Negate ``round(fraction * n)`` units, rounding halves up."""

    fraction: float


@dataclass(frozen=True)
class MaskRegion:
    """Force units ``first_index .. first_index + length - 1`` to -1."""

    first_index: int
    length: int


Corruption = Union[FlipBits, FlipFraction, MaskRegion]


@dataclass(frozen=True)
class CorruptionSpec:
    kind: Corruption
    seed: int = 0

    def validate(self, n: int) -> None:
        k = self.kind
        if isinstance(k, FlipBits):
            if not 0 <= k.count <= n:
                raise SpecOutOfRange(f"flip count {k.count} outside [0, {n}]")
        elif isinstance(k, FlipFraction):
            if not 0.0 <= k.fraction <= 1.0:
                raise SpecOutOfRange(f"flip fraction {k.fraction} outside [0, 1]")
        elif isinstance(k, MaskRegion):
            if k.first_index < 0 or k.length < 0 or k.first_index + k.length > n:
                raise SpecOutOfRange(
                    f"mask [{k.first_index}, {k.first_index + k.length}) outside [0, {n})"
                )
        else:
            raise SpecOutOfRange(f"unknown corruption kind {k!r}")


def flip_count(fraction: float, n: int) -> int:
    return math.floor(fraction * n + 0.5)


def corrupt(x: BipolarPattern, spec: CorruptionSpec) -> BipolarPattern:
    n = len(x)
    spec.validate(n)
    kind = spec.kind
    out = x.values.copy()
    if isinstance(kind, MaskRegion):
        out[kind.first_index : kind.first_index + kind.length] = -1
    else:
        k = kind.count if isinstance(kind, FlipBits) else flip_count(kind.fraction, n)
        rng = np.random.default_rng(spec.seed)
        out[rng.choice(n, size=k, replace=False)] *= -1
    return BipolarPattern._trusted(out)
