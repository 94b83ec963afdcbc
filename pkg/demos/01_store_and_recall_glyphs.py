"""
Storing and recalling binary images
===================================

Three 16x16 glyphs are stored in one Hopfield memory. Each is then degraded,
first by flipping random pixels and then by blanking a band of rows, and the
memory is asked to restore it.

Run from the repository root::

    python demos/01_store_and_recall_glyphs.py
"""

from pathlib import Path

from hopfield_recall import (
    CorruptionSpec,
    FlipBits,
    MaskRegion,
    RecallConfig,
    bitmap_to_pattern,
    corrupt,
    hamming_distance,
    is_orthogonal_set,
    load_pbm,
    pattern_to_bitmap,
    recall,
    train,
)

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def show(*bitmaps, titles=()):
    rows = [b.to_array() for b in bitmaps]
    print("   ".join(f"{t:<32}" for t in titles))
    for r in range(rows[0].shape[0]):
        print("   ".join("".join("##" if v else " ." for v in img[r]) for img in rows))
    print()


# %%
# Load the glyphs and store them. The overlaps between patterns are small
# compared to n = 256, which is what lets them coexist in one memory.
names = ["checker16", "rings16", "diagonal16"]
bitmaps = [load_pbm(FIXTURES / f"{n}.pbm") for n in names]
patterns = [bitmap_to_pattern(b) for b in bitmaps]
w = train(patterns)
report = is_orthogonal_set(patterns)
print("n =", w.n, " patterns =", w.pattern_count)
print("pairwise overlaps:\n", report.gram, "\n")

# %%
# Noise: flip 12 random pixels of each glyph, then recall.
for i, (b, x) in enumerate(zip(bitmaps, patterns)):
    probe = corrupt(x, CorruptionSpec(FlipBits(12), seed=100 + i))
    trace = recall(w, probe, RecallConfig(order_seed=i))
    out = pattern_to_bitmap(trace.final, b.width, b.height)
    show(pattern_to_bitmap(probe, 16, 16), out, titles=("probe (12 flips)", "recalled"))
    print(f"{names[i]}: converged={trace.converged} sweeps={trace.sweeps_used} "
          f"errors left={hamming_distance(trace.final, x)}\n")

# %%
# Occlusion: whiten the top five rows (80 pixels) of the rings glyph.
probe = corrupt(patterns[1], CorruptionSpec(MaskRegion(0, 80)))
trace = recall(w, probe)
show(pattern_to_bitmap(probe, 16, 16), pattern_to_bitmap(trace.final, 16, 16),
     titles=("probe (rows 0-4 blank)", "recalled"))
print("errors left:", hamming_distance(trace.final, patterns[1]))
