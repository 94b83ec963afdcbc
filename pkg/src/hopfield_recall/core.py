"""Bipolar patterns, Hebbian storage, energy and recall dynamics.

All arithmetic is exact: patterns are ``int8`` arrays over {-1, +1} and
weights are ``int64`` sums of outer products, so energies and activations are
plain integers and the asynchronous descent property can be checked with zero
tolerance.

Unit indices are 0-based throughout.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    EmptyPattern,
    EmptyTrainingSet,
    IndexOutOfRange,
    LengthMismatch,
    NonBipolarValue,
    ValidationError,
)

__all__ = [
    "BipolarPattern",
    "WeightMatrix",
    "UpdateMode",
    "RecallConfig",
    "TraceStep",
    "RecallTrace",
    "make_pattern",
    "complement",
    "hamming_distance",
    "euclidean_distance",
    "train",
    "activation",
    "update_unit",
    "energy",
    "recall",
    "is_fixed_point",
    "is_orthogonal_set",
    "OrthogonalityReport",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class BipolarPattern:
    """Immutable vector over {-1, +1}.

    Use :func:`make_pattern` to build one from arbitrary integers; the
    constructor performs the same validation.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int] | np.ndarray):
        arr = np.asarray(values)
        if arr.ndim != 1:
            raise NonBipolarValue(f"pattern must be 1-D, got shape {arr.shape}")
        if arr.size == 0:
            raise EmptyPattern("pattern must have at least one unit")
        bad = (arr != 1) & (arr != -1)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise NonBipolarValue(f"unit {i} is {arr[i]!r}, expected -1 or +1")
        self._values = _frozen(arr.astype(np.int8))

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "BipolarPattern":
        # skips validation; arr must already be a bipolar int8 vector
        p = cls.__new__(cls)
        p._values = _frozen(np.array(arr, dtype=np.int8))
        return p

    @property
    def values(self) -> np.ndarray:
        """Read-only ``int8`` view of the units."""
        return self._values

    def __len__(self) -> int:
        return self._values.size

    def __iter__(self) -> Iterator[int]:
        return (int(v) for v in self._values)

    def __getitem__(self, i: int) -> int:
        return int(self._values[i])

    def __neg__(self) -> "BipolarPattern":
        return complement(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipolarPattern):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def tolist(self) -> list[int]:
        return self._values.tolist()

    def __repr__(self) -> str:
        body = "".join("+" if v > 0 else "-" for v in self._values[:64])
        more = "..." if len(self) > 64 else ""
        return f"BipolarPattern({body}{more}, n={len(self)})"


class WeightMatrix:
    """Symmetric integer weight matrix with a zero diagonal.

    ``pattern_count`` records how many patterns were summed into it; every
    entry is bounded by it in absolute value.
    """

    __slots__ = ("_entries", "pattern_count")

    def __init__(self, entries, pattern_count: int | None = None):
        arr = np.asarray(entries)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise LengthMismatch(f"weights must be a non-empty square matrix, got shape {arr.shape}")
        if not np.issubdtype(arr.dtype, np.integer):
            if not np.array_equal(arr, np.round(arr)):
                raise ValidationError("weights must be integers")
        arr = arr.astype(np.int64)
        if not np.array_equal(arr, arr.T):
            raise ValidationError("weights must be symmetric")
        if np.any(np.diag(arr)):
            raise ValidationError("weights must have a zero diagonal")
        bound = int(np.abs(arr).max())
        if pattern_count is None:
            pattern_count = bound
        elif pattern_count < bound:
            raise ValidationError(f"entry of magnitude {bound} exceeds pattern count {pattern_count}")
        self._entries = _frozen(arr)
        self.pattern_count = int(pattern_count)

    @classmethod
    def zeros(cls, n: int) -> "WeightMatrix":
        return cls(np.zeros((n, n), dtype=np.int64), pattern_count=0)

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only ``int64`` array of shape ``(n, n)``."""
        return self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __repr__(self) -> str:
        return f"WeightMatrix(n={self.n}, pattern_count={self.pattern_count})"


class UpdateMode(enum.Enum):
    ASYNCHRONOUS = "async"
    SYNCHRONOUS = "sync"


@dataclass(frozen=True)
class RecallConfig:
    """How recall iterates.

    ``max_sweeps=None`` means ``10 * n`` for the network being recalled.
    ``order_seed`` seeds the per-sweep random visit order in asynchronous
    mode (numpy PCG64 via ``default_rng``); it is ignored in synchronous mode.
    """

    mode: UpdateMode = UpdateMode.ASYNCHRONOUS
    max_sweeps: int | None = None
    order_seed: int = 0

    def __post_init__(self):
        if not isinstance(self.mode, UpdateMode):
            object.__setattr__(self, "mode", UpdateMode(self.mode))
        if self.max_sweeps is not None and self.max_sweeps < 1:
            raise ValidationError(f"max_sweeps must be >= 1, got {self.max_sweeps}")

    def sweeps_for(self, n: int) -> int:
        return 10 * n if self.max_sweeps is None else self.max_sweeps


class TraceStep(NamedTuple):
    state: BipolarPattern
    energy: int


@dataclass
class RecallTrace:
    """States visited by :func:`recall`, each with its energy.

    ``steps[0]`` is the probe. In asynchronous mode a step is appended after
    every unit that changes; in synchronous mode after every sweep that
    changes the state. ``sweeps_used`` counts every full pass performed,
    including the final pass that confirmed convergence.
    """

    steps: list[TraceStep] = field(default_factory=list)
    converged: bool = False
    sweeps_used: int = 0
    cycle_detected: bool = False

    @property
    def final(self) -> BipolarPattern:
        return self.steps[-1].state

    @property
    def final_energy(self) -> int:
        return self.steps[-1].energy

    @property
    def energies(self) -> list[int]:
        return [s.energy for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def make_pattern(raw: Sequence[int]) -> BipolarPattern:
    """Validate ``raw`` and wrap it as a pattern."""
    return BipolarPattern(raw)


def complement(x: BipolarPattern) -> BipolarPattern:
    return BipolarPattern._trusted(-x.values)


def _check_same_length(u: BipolarPattern, v: BipolarPattern) -> None:
    if len(u) != len(v):
        raise LengthMismatch(f"patterns have lengths {len(u)} and {len(v)}")


def hamming_distance(u: BipolarPattern, v: BipolarPattern) -> int:
    _check_same_length(u, v)
    return int(np.count_nonzero(u.values != v.values))


def euclidean_distance(u: BipolarPattern, v: BipolarPattern) -> float:
    """Euclidean distance, via the bipolar identity ``2 * sqrt(hamming)``."""
    return 2.0 * math.sqrt(hamming_distance(u, v))


def train(patterns: Sequence[BipolarPattern]) -> WeightMatrix:
    """Hebbian storage: sum of outer products with the diagonal zeroed."""
    patterns = list(patterns)
    if not patterns:
        raise EmptyTrainingSet("need at least one pattern to train")
    n = len(patterns[0])
    for k, p in enumerate(patterns):
        if len(p) != n:
            raise LengthMismatch(f"pattern {k} has length {len(p)}, expected {n}")
    X = np.stack([p.values for p in patterns]).astype(np.int64)
    W = X.T @ X
    np.fill_diagonal(W, 0)
    return WeightMatrix(W, pattern_count=len(patterns))


def _check_state(w: WeightMatrix, state: BipolarPattern) -> None:
    if len(state) != w.n:
        raise LengthMismatch(f"state has length {len(state)}, network has {w.n} units")


def activation(w: WeightMatrix, state: BipolarPattern, j: int) -> int:
    """Net input of unit ``j``: column ``j`` of ``w`` dotted with ``state``."""
    _check_state(w, state)
    if not 0 <= j < w.n:
        raise IndexOutOfRange(f"unit index {j} outside [0, {w.n})")
    return int(w.entries[:, j] @ state.values)


def update_unit(current: int, net: int) -> int:
    """Threshold rule: sign of ``net``, holding ``current`` when it is zero."""
    if net > 0:
        return 1
    if net < 0:
        return -1
    return current


def energy(w: WeightMatrix, x: BipolarPattern) -> int:
    """``-x^T W x`` (no one-half factor)."""
    _check_state(w, x)
    v = x.values.astype(np.int64)
    return -int(v @ w.entries @ v)


def is_fixed_point(w: WeightMatrix, x: BipolarPattern) -> bool:
    _check_state(w, x)
    v = x.values.astype(np.int64)
    net = w.entries @ v
    return bool(np.all(v * net >= 0))


def recall(w: WeightMatrix, probe: BipolarPattern, config: RecallConfig | None = None) -> RecallTrace:
    """Iterate the threshold dynamics from ``probe`` until nothing changes.

    Asynchronous mode visits every unit once per sweep in a fresh random
    order, each update seeing the already-updated state. Synchronous mode
    updates all units at once from the previous state; a period-2 cycle
    stops the run with ``converged=False`` and the lower-energy state of the
    cycle last in the trace. Either mode gives up after the sweep cap.
    """
    config = config or RecallConfig()
    _check_state(w, probe)
    max_sweeps = config.sweeps_for(w.n)
    if config.mode is UpdateMode.ASYNCHRONOUS:
        return _recall_async(w, probe, max_sweeps, config.order_seed)
    return _recall_sync(w, probe, max_sweeps)


def _recall_async(w: WeightMatrix, probe: BipolarPattern, max_sweeps: int, seed: int) -> RecallTrace:
    W = w.entries
    x = probe.values.astype(np.int64)
    e = energy(w, probe)
    trace = RecallTrace(steps=[TraceStep(probe, e)])
    rng = np.random.default_rng(seed)
    for sweep in range(1, max_sweeps + 1):
        changed = False
        for j in rng.permutation(w.n):
            net = int(W[j] @ x)
            old = int(x[j])
            new = update_unit(old, net)
            if new != old:
                x[j] = new
                # zero diagonal: flipping unit j moves E by 4 * old * net
                e += 4 * old * net
                trace.steps.append(TraceStep(BipolarPattern._trusted(x), e))
                changed = True
        trace.sweeps_used = sweep
        if not changed:
            trace.converged = True
            break
    return trace


def _recall_sync(w: WeightMatrix, probe: BipolarPattern, max_sweeps: int) -> RecallTrace:
    W = w.entries
    prev = probe.values.astype(np.int64)
    trace = RecallTrace(steps=[TraceStep(probe, energy(w, probe))])
    before_prev = None
    for sweep in range(1, max_sweeps + 1):
        net = W @ prev
        new = np.where(net > 0, 1, np.where(net < 0, -1, prev))
        trace.sweeps_used = sweep
        if np.array_equal(new, prev):
            trace.converged = True
            break
        if before_prev is not None and np.array_equal(new, before_prev):
            trace.cycle_detected = True
            # the trace ends on prev; keep it only if strictly lower in energy
            state = BipolarPattern._trusted(new)
            e = energy(w, state)
            if e < trace.final_energy:
                trace.steps.append(TraceStep(state, e))
            break
        state = BipolarPattern._trusted(new)
        trace.steps.append(TraceStep(state, energy(w, state)))
        before_prev, prev = prev, new
    return trace


@dataclass(frozen=True)
class OrthogonalityReport:
    orthogonal: bool
    gram: np.ndarray

    def __bool__(self) -> bool:
        return self.orthogonal


def is_orthogonal_set(patterns: Sequence[BipolarPattern]) -> OrthogonalityReport:
    """Check pairwise orthogonality; ``gram`` holds all dot products."""
    patterns = list(patterns)
    if not patterns:
        return OrthogonalityReport(True, _frozen(np.zeros((0, 0), dtype=np.int64)))
    n = len(patterns[0])
    for k, p in enumerate(patterns):
        if len(p) != n:
            raise LengthMismatch(f"pattern {k} has length {len(p)}, expected {n}")
    X = np.stack([p.values for p in patterns]).astype(np.int64)
    G = X @ X.T
    off = G - np.diag(np.diag(G))
    return OrthogonalityReport(not off.any(), _frozen(G))
