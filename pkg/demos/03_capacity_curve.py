"""
How many patterns fit?
======================

Sweep the number of stored random patterns ``m`` for ``n = 100`` units and
measure how often a probe with 10 flipped bits fails to return exactly the
pattern it came from. The failure rate climbs steeply between ``0.1 n`` and
``0.25 n``, around the classical ``0.14 n`` capacity.

Each load uses its own random pattern set, so neighbouring loads can differ
noticeably. Raise ``SEEDS`` to average over several draws.
"""

import numpy as np

from hopfield_recall import CapacityRunSpec, run_capacity_sweep, write_results_csv

N, LOADS, TRIALS, FLIPS, SEEDS = 100, range(2, 31, 2), 200, 10, 3

rates = []
for seed in range(SEEDS):
    result = run_capacity_sweep(
        CapacityRunSpec(n=N, loads=tuple(LOADS), trials_per_load=TRIALS, probe_flip_count=FLIPS, master_seed=seed)
    )
    rates.append([row.pattern_error_rate for row in result.loads])
    if seed == 0:
        print(write_results_csv(result).decode())

mean = np.mean(rates, axis=0)
print(" m   load   mean pattern error")
for m, r in zip(LOADS, mean):
    bar = "#" * int(round(40 * r))
    print(f"{m:2d}  {m / N:.2f}   {r:.3f} {bar}")

# %%
# Optional plot, if matplotlib is installed.
try:
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    plt.plot(np.array(LOADS) / N, mean, "o-")
    plt.axvline(0.14, ls="--", c="gray")
    plt.axhline(0.05, ls=":", c="gray")
    plt.xlabel("load m / n")
    plt.ylabel("pattern error rate")
    plt.savefig("capacity_curve.png", dpi=120)
    print("wrote capacity_curve.png")
