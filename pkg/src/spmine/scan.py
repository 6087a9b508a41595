"""The single database pass that yields every singleton support sequence."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .core import TemporalDatabase, support_sequence


class PassCounter:
    """Counts full passes over a database's transactions."""

    def __init__(self):
        self.passes = 0

    def tick(self):
        self.passes += 1

    def __repr__(self):
        return f"PassCounter(passes={self.passes})"


def singleton_support_matrix(db: TemporalDatabase, counter: PassCounter | None = None) -> np.ndarray:
    """Supports of all items at once, shape (n_items, n_slots)."""
    counts = _kernels.count_items(db.incidence, db.offsets)
    if counter is not None:
        counter.tick()
    return (counts / db.slot_sizes[:, None]).T


def scan_singleton_supports(db: TemporalDatabase, counter: PassCounter | None = None) -> dict[int, np.ndarray]:
    """Map every item id to its positive support sequence, reading the data once."""
    matrix = singleton_support_matrix(db, counter)
    return {i: support_sequence(matrix[i]) for i in range(db.n_items)}


def negative_sequence(s) -> np.ndarray:
    """Per-slot probability that the pattern is absent: ``1 - s``."""
    return support_sequence(1.0 - np.asarray(s, dtype=np.float64))
