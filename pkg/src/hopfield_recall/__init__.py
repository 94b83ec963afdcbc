"""Hopfield associative memory for bipolar patterns and binary images."""

__version__ = "0.1.0"

from .codec import Bitmap, bitmap_to_pattern, load_pbm, pattern_to_bitmap, read_pbm, save_pbm, write_pbm
from .core import (
    BipolarPattern,
    RecallConfig,
    RecallTrace,
    UpdateMode,
    WeightMatrix,
    activation,
    complement,
    energy,
    euclidean_distance,
    hamming_distance,
    is_fixed_point,
    is_orthogonal_set,
    make_pattern,
    recall,
    train,
    update_unit,
)
from .corruption import CorruptionSpec, FlipBits, FlipFraction, MaskRegion, corrupt
from .experiments import CapacityRunSpec, CapacityResult, run_capacity_sweep, write_results_csv
from .memory_file import load_memory, read_memory, save_memory, write_memory
