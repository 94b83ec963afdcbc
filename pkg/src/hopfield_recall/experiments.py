"""Storage-capacity experiments: recall fidelity as a function of load.

For each load ``m`` one set of ``m`` i.i.d. uniform patterns is drawn and
stored. Each trial then picks one stored pattern, flips ``probe_flip_count``
of its units, recalls, and scores the final state against the pattern that
was probed. Landing on the exact complement counts as a failure; those cases
are also tallied in ``complement_rate``.

Seeding: every random stream is a ``numpy.random.SeedSequence`` built from
``master_seed`` and a spawn key naming its role, ``(m, 0, 0)`` for the
pattern set of load ``m`` and ``(m, 1, t)`` for trial ``t``. Results for a
load therefore do not depend on which other loads are swept, nor on the
order in which trials run.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .core import BipolarPattern, RecallConfig, UpdateMode, hamming_distance, recall, train
from .corruption import CorruptionSpec, FlipBits, corrupt
from .errors import SpecOutOfRange

__all__ = [
    "CSV_HEADER",
    "CapacityRunSpec",
    "TrialRecord",
    "LoadResult",
    "CapacityResult",
    "random_patterns",
    "run_trial",
    "run_capacity_sweep",
    "write_results_csv",
]

CSV_HEADER = (
    "n", "m", "trials", "flips",
    "pattern_error_rate", "bit_error_rate", "mean_sweeps", "convergence_rate",
)


@dataclass(frozen=True)
class CapacityRunSpec:
    n: int
    loads: tuple[int, ...]
    trials_per_load: int = 100
    probe_flip_count: int = 0
    master_seed: int = 0
    mode: UpdateMode = UpdateMode.ASYNCHRONOUS
    max_sweeps: int | None = None  # None -> 10 * n

    def __post_init__(self):
        object.__setattr__(self, "loads", tuple(int(m) for m in self.loads))
        if not isinstance(self.mode, UpdateMode):
            object.__setattr__(self, "mode", UpdateMode(self.mode))
        if self.n < 1:
            raise SpecOutOfRange(f"n must be positive, got {self.n}")
        if any(m < 1 for m in self.loads):
            raise SpecOutOfRange(f"loads must be positive, got {self.loads}")
        if self.trials_per_load < 1:
            raise SpecOutOfRange(f"trials_per_load must be positive, got {self.trials_per_load}")
        if not 0 <= self.probe_flip_count <= self.n:
            raise SpecOutOfRange(f"probe_flip_count {self.probe_flip_count} outside [0, {self.n}]")
        if self.max_sweeps is not None and self.max_sweeps < 1:
            raise SpecOutOfRange(f"max_sweeps must be positive, got {self.max_sweeps}")

    def recall_config(self, order_seed: int) -> RecallConfig:
        return RecallConfig(mode=self.mode, max_sweeps=self.max_sweeps, order_seed=order_seed)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    target: int
    bit_errors: int
    sweeps: int
    converged: bool
    complement: bool

    @property
    def failed(self) -> bool:
        return self.bit_errors > 0


@dataclass(frozen=True)
class LoadResult:
    m: int
    trials: tuple[TrialRecord, ...]
    n: int
    flips: int

    @property
    def pattern_error_rate(self) -> float:
        return sum(t.failed for t in self.trials) / len(self.trials)

    @property
    def bit_error_rate(self) -> float:
        return sum(t.bit_errors for t in self.trials) / (len(self.trials) * self.n)

    @property
    def mean_sweeps(self) -> float:
        return sum(t.sweeps for t in self.trials) / len(self.trials)

    @property
    def convergence_rate(self) -> float:
        return sum(t.converged for t in self.trials) / len(self.trials)

    @property
    def complement_rate(self) -> float:
        return sum(t.complement for t in self.trials) / len(self.trials)


@dataclass(frozen=True)
class CapacityResult:
    spec: CapacityRunSpec
    loads: tuple[LoadResult, ...] = field(default_factory=tuple)

    def by_load(self) -> dict[int, LoadResult]:
        return {r.m: r for r in self.loads}


def _seq(master_seed: int, *key: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master_seed, spawn_key=key)


def random_patterns(m: int, n: int, rng: np.random.Generator) -> list[BipolarPattern]:
    """``m`` i.i.d. uniform patterns over {-1, +1}^n."""
    X = rng.integers(0, 2, size=(m, n), dtype=np.int8) * 2 - 1
    return [BipolarPattern._trusted(row) for row in X]


def run_trial(spec: CapacityRunSpec, m: int, trial: int, patterns, weights) -> TrialRecord:
    rng = np.random.default_rng(_seq(spec.master_seed, m, 1, trial))
    target = int(rng.integers(m))
    corrupt_seed, order_seed = (int(s) for s in rng.integers(0, 2**63, size=2))
    probe = corrupt(patterns[target], CorruptionSpec(FlipBits(spec.probe_flip_count), corrupt_seed))
    trace = recall(weights, probe, spec.recall_config(order_seed))
    errors = hamming_distance(trace.final, patterns[target])
    return TrialRecord(
        trial=trial,
        target=target,
        bit_errors=errors,
        sweeps=trace.sweeps_used,
        converged=trace.converged,
        complement=errors == spec.n,
    )


def run_capacity_sweep(spec: CapacityRunSpec) -> CapacityResult:
    results = []
    for m in spec.loads:
        rng = np.random.default_rng(_seq(spec.master_seed, m, 0, 0))
        patterns = random_patterns(m, spec.n, rng)
        weights = train(patterns)
        trials = tuple(
            run_trial(spec, m, t, patterns, weights) for t in range(spec.trials_per_load)
        )
        results.append(LoadResult(m=m, trials=trials, n=spec.n, flips=spec.probe_flip_count))
    return CapacityResult(spec=spec, loads=tuple(results))


def write_results_csv(r: CapacityResult) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in r.loads:
        w.writerow([
            row.n, row.m, len(row.trials), row.flips,
            f"{row.pattern_error_rate:.6f}",
            f"{row.bit_error_rate:.6f}",
            f"{row.mean_sweeps:.6f}",
            f"{row.convergence_rate:.6f}",
        ])
    return buf.getvalue().encode("ascii")
