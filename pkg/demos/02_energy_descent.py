"""
Energy along a recall trajectory
================================

With one unit updated at a time, every change lowers the energy
``-x^T W x`` by ``4 * |net input|``. The trace returned by ``recall`` records
the state and its energy after each change, so the descent can be read off
directly.
"""

import numpy as np

from hopfield_recall import BipolarPattern, RecallConfig, UpdateMode, energy, recall, train

rng = np.random.default_rng(0)
n, m = 64, 5
patterns = [BipolarPattern(rng.choice([-1, 1], n)) for _ in range(m)]
w = train(patterns)

# %%
# Start from a random state, far from every stored pattern.
probe = BipolarPattern(rng.choice([-1, 1], n))
trace = recall(w, probe, RecallConfig(mode=UpdateMode.ASYNCHRONOUS, order_seed=1))
print("step  energy  drop")
prev = None
for i, (state, e) in enumerate(trace.steps):
    print(f"{i:4d}  {e:6d}  {'' if prev is None else prev - e}")
    prev = e
print("converged:", trace.converged, "after", trace.sweeps_used, "sweeps")

# %%
# The final state is a local minimum. How does it compare with the stored
# patterns, whose energies are typically lower still?
overlaps = [int(trace.final.values.astype(int) @ p.values) for p in patterns]
print("overlap of final state with each stored pattern:", overlaps)
print("stored pattern energies:", [energy(w, p) for p in patterns])
