"""
Parallel versus one-at-a-time updates
=====================================

Updating every unit at once from the previous state can oscillate forever
between two states. ``recall`` detects such a 2-cycle and reports
``converged=False``. Updating one unit at a time always settles.
"""

import numpy as np

from hopfield_recall import BipolarPattern, RecallConfig, UpdateMode, recall, train

rng = np.random.default_rng(7)
n = 40
patterns = [BipolarPattern(rng.choice([-1, 1], n)) for _ in range(10)]
w = train(patterns)

cycles = 0
for seed in range(200):
    probe = BipolarPattern(np.random.default_rng(seed).choice([-1, 1], n))
    sync = recall(w, probe, RecallConfig(mode=UpdateMode.SYNCHRONOUS))
    asyn = recall(w, probe, RecallConfig(mode=UpdateMode.ASYNCHRONOUS, order_seed=seed))
    assert asyn.converged
    if sync.cycle_detected:
        cycles += 1
        if cycles == 1:
            print("first 2-cycle at probe seed", seed)
            print("  sync energies per sweep:", sync.energies)
            print("  async final energy:     ", asyn.final_energy)
print(f"synchronous runs ending in a 2-cycle: {cycles} / 200; asynchronous: all converged")
