"""Command-line front end.

Exit statuses: 0 success, 1 I/O or parse error, 2 validation error,
3 recall did not converge (the recalled image is still written).
Diagnostics go to stderr; data goes to files or stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import __version__
from .codec import bitmap_to_pattern, load_pbm, pattern_to_bitmap, write_pbm
from .core import RecallConfig, UpdateMode, energy, hamming_distance, is_orthogonal_set, recall, train
from .corruption import CorruptionSpec, FlipBits, MaskRegion, corrupt
from .errors import DimensionMismatch, ParseError, ValidationError
from .experiments import CapacityRunSpec, run_capacity_sweep, write_results_csv
from .memory_file import load_memory, write_memory

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_NOT_CONVERGED = 0, 1, 2, 3

_MODES = {"async": UpdateMode.ASYNCHRONOUS, "sync": UpdateMode.SYNCHRONOUS}


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write_bytes(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as f:
            f.write(data)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _mask(text: str) -> tuple[int, int]:
    parts = text.split(",")
    try:
        x0, length = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected FIRST,LENGTH, got {text!r}")
    return x0, length


def _recall_config(args) -> RecallConfig:
    return RecallConfig(mode=_MODES[args.mode], max_sweeps=args.max_sweeps, order_seed=args.order_seed)


def _load_probe(args):
    w = load_memory(args.memory)
    bitmap = load_pbm(args.probe)
    probe = bitmap_to_pattern(bitmap)
    if len(probe) != w.n:
        raise DimensionMismatch(
            f"probe is {bitmap.width}x{bitmap.height} = {len(probe)} units, memory has n={w.n}"
        )
    return w, bitmap, probe


def cmd_store(args) -> int:
    bitmaps = [load_pbm(p) for p in args.images]
    shapes = {(b.width, b.height) for b in bitmaps}
    if len(shapes) > 1:
        raise DimensionMismatch(f"images have differing dimensions: {sorted(shapes)}")
    patterns = [bitmap_to_pattern(b) for b in bitmaps]
    w = train(patterns)
    _write_bytes(args.output, write_memory(w))

    report = is_orthogonal_set(patterns)
    g = report.gram
    off = [abs(int(g[i, j])) for i in range(len(patterns)) for j in range(i + 1, len(patterns))]
    _err(f"patterns: {len(patterns)}")
    _err(f"n: {w.n}")
    _err(f"orthogonal: {'yes' if report.orthogonal else 'no'}"
         + (f" (max |overlap| {max(off)} of {w.n})" if off else ""))
    return EXIT_OK


def cmd_recall(args) -> int:
    w, bitmap, probe = _load_probe(args)
    trace = recall(w, probe, _recall_config(args))
    out = pattern_to_bitmap(trace.final, bitmap.width, bitmap.height)
    _write_bytes(args.output, write_pbm(out))
    if args.trace:
        buf = io.StringIO()
        cw = csv.writer(buf, lineterminator="\n")
        cw.writerow(("step", "energy"))
        cw.writerows(enumerate(trace.energies))
        _write_bytes(args.trace, buf.getvalue().encode("ascii"))

    _err(f"sweeps: {trace.sweeps_used}")
    _err(f"converged: {str(trace.converged).lower()}")
    _err(f"energy: {energy(w, trace.final)}")
    _err(f"hamming_from_probe: {hamming_distance(probe, trace.final)}")
    if not trace.converged:
        _err("recall did not converge" + (" (2-cycle)" if trace.cycle_detected else ""))
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_trace(args) -> int:
    w, _, probe = _load_probe(args)
    trace = recall(w, probe, _recall_config(args))
    buf = io.StringIO()
    cw = csv.writer(buf, lineterminator="\n")
    cw.writerow(("step", "energy", "hamming_from_probe"))
    for i, step in enumerate(trace.steps):
        cw.writerow((i, step.energy, hamming_distance(probe, step.state)))
    _write_bytes(args.output, buf.getvalue().encode("ascii"))
    _err(f"steps: {len(trace)} sweeps: {trace.sweeps_used} converged: {str(trace.converged).lower()}")
    return EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def cmd_corrupt(args) -> int:
    bitmap = load_pbm(args.image)
    if args.flip is not None:
        kind = FlipBits(args.flip)
    else:
        kind = MaskRegion(*args.mask)
    x = corrupt(bitmap_to_pattern(bitmap), CorruptionSpec(kind, args.seed))
    _write_bytes(args.output, write_pbm(pattern_to_bitmap(x, bitmap.width, bitmap.height)))
    return EXIT_OK


def cmd_capacity(args) -> int:
    spec = CapacityRunSpec(
        n=args.n,
        loads=args.loads,
        trials_per_load=args.trials,
        probe_flip_count=args.flips,
        master_seed=args.seed,
        mode=_MODES[args.mode],
        max_sweeps=args.max_sweeps,
    )
    result = run_capacity_sweep(spec)
    _write_bytes(args.out, write_results_csv(result))
    for row in result.loads:
        _err(
            f"m={row.m} load={row.m / spec.n:.3f} pattern_error={row.pattern_error_rate:.4f} "
            f"bit_error={row.bit_error_rate:.4f} complement={row.complement_rate:.4f} "
            f"sweeps={row.mean_sweeps:.2f} converged={row.convergence_rate:.4f}"
        )
    return EXIT_OK


def _add_dynamics(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=sorted(_MODES), default="async")
    p.add_argument("--max-sweeps", type=int, default=None, help="default: 10 * n")
    p.add_argument("--order-seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfield", description="Hopfield associative memory for binary images.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("store", help="train a memory file from PBM images")
    p.add_argument("images", nargs="+")
    p.add_argument("-o", "--output", required=True, help="memory file to write")
    p.set_defaults(func=cmd_store)

    p = sub.add_parser("recall", help="recall a stored image from a probe")
    p.add_argument("memory")
    p.add_argument("probe")
    p.add_argument("output", help="recalled PBM image ('-' for stdout)")
    _add_dynamics(p)
    p.add_argument("--trace", metavar="CSV", help="write per-step energies here")
    p.set_defaults(func=cmd_recall)

    p = sub.add_parser("trace", help="print the recall trajectory as CSV")
    p.add_argument("memory")
    p.add_argument("probe")
    p.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    _add_dynamics(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("corrupt", help="write a degraded copy of an image")
    p.add_argument("image")
    p.add_argument("output")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--flip", type=int, metavar="K", help="flip K random pixels")
    g.add_argument("--mask", type=_mask, metavar="FIRST,LENGTH",
                   help="whiten LENGTH pixels from row-major index FIRST")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("capacity", help="recall error versus number of stored patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--loads", type=_int_list, required=True, help="comma-separated pattern counts")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--flips", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=sorted(_MODES), default="async")
    p.add_argument("--max-sweeps", type=int, default=None)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        _err(f"error: {e}")
        return EXIT_IO
    except ValidationError as e:
        _err(f"error: {e}")
        return EXIT_INVALID
    except OSError as e:
        _err(f"error: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
