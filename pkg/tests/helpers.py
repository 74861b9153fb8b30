"""Shared test support: a copy-based trail reference and a fuzz driver."""

import random
from collections import Counter

from trailcp import Trail, TrailedInt


class CopyModel:
    """Reference for the trail: snapshots every value at each new node."""

    def __init__(self, init_values):
        self.init = list(init_values)
        self.values = list(init_values)
        self.snapshots = []

    def set(self, k, v):
        self.values[k] = v

    def new_node(self):
        self.snapshots.append(list(self.values))

    def undo_node(self):
        if self.snapshots:
            self.values = self.snapshots.pop()

    def undo_all(self):
        self.values = list(self.init)
        self.snapshots.clear()


def max_entries_per_node(trail):
    """Largest number of entries any single object has in one node segment."""
    entries = trail.entries()
    cuts = [0, *trail.boundaries, len(entries)]
    worst = 0
    for lo, hi in zip(cuts, cuts[1:]):
        counts = Counter(id(e) for e in entries[lo:hi])
        worst = max(worst, max(counts.values(), default=0))
    return worst


def fuzz_trail(seed, steps=10_000, n_ints=10, value_range=(-5, 5), check_entries=False):
    """Drive a trail and its copy reference with the same random operations.

    Returns ``(mismatches, nodes_opened, worst_entries_per_node)``; the last
    is only measured when ``check_entries`` is set.
    """
    rng = random.Random(seed)
    trail = Trail()
    init = [rng.randint(*value_range) for _ in range(n_ints)]
    ints = [TrailedInt(trail, v) for v in init]
    ref = CopyModel(init)
    mismatches = 0
    nodes = 0
    worst = 0
    for _ in range(steps):
        r = rng.random()
        if r < 0.6:
            k = rng.randrange(n_ints)
            v = rng.randint(*value_range)
            ints[k].set_value(v)
            ref.set(k, v)
        elif r < 0.8:
            trail.new_node()
            ref.new_node()
            nodes += 1
        elif r < 0.99:
            trail.undo_node()
            ref.undo_node()
        else:
            trail.undo_all()
            ref.undo_all()
        if [t.get_value() for t in ints] != ref.values:
            mismatches += 1
        if check_entries and r < 0.6:
            worst = max(worst, max_entries_per_node(trail))
    return mismatches, nodes, worst
