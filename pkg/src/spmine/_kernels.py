"""Counting kernels over a slot-grouped 0/1 incidence matrix.

Each kernel has a numba version and a numpy version with identical integer
results. ``SPMINE_DISABLE_NUMBA=1`` (or a missing numba) selects numpy.
"""

import logging

import numpy as np

from . import config

logger = logging.getLogger(__name__)


def count_items_numpy(incidence, offsets):
    """Occurrences of every item in every slot, shape (n_slots, n_items)."""
    if incidence.shape[0] == 0:
        return np.zeros((offsets.shape[0] - 1, incidence.shape[1]), dtype=np.int64)
    return np.add.reduceat(incidence.astype(np.int64), offsets[:-1], axis=0)


def count_pattern_numpy(incidence, offsets, present, absent):
    """Per-slot count of transactions holding every ``present`` item and no ``absent`` item."""
    mask = np.ones(incidence.shape[0], dtype=np.bool_)
    if present.shape[0]:
        mask &= incidence[:, present].all(axis=1)
    if absent.shape[0]:
        mask &= ~incidence[:, absent].any(axis=1)
    if incidence.shape[0] == 0:
        return np.zeros(offsets.shape[0] - 1, dtype=np.int64)
    return np.add.reduceat(mask.astype(np.int64), offsets[:-1])


def _count_items_py(incidence, offsets):
    n_slots = offsets.shape[0] - 1
    n_items = incidence.shape[1]
    counts = np.zeros((n_slots, n_items), dtype=np.int64)
    for s in range(n_slots):
        for r in range(offsets[s], offsets[s + 1]):
            for i in range(n_items):
                counts[s, i] += incidence[r, i]
    return counts


def _count_pattern_py(incidence, offsets, present, absent):
    n_slots = offsets.shape[0] - 1
    n_present = present.shape[0]
    n_absent = absent.shape[0]
    counts = np.zeros(n_slots, dtype=np.int64)
    for s in range(n_slots):
        c = 0
        for r in range(offsets[s], offsets[s + 1]):
            # branch-free: early exits cost more than they save on short rows
            hit = 1
            for k in range(n_present):
                hit &= incidence[r, present[k]]
            for k in range(n_absent):
                hit &= 1 - incidence[r, absent[k]]
            c += hit
        counts[s] = c
    return counts


try:
    from numba import njit

    count_items_numba = njit(cache=True, nogil=True)(_count_items_py)
    count_pattern_numba = njit(cache=True, nogil=True)(_count_pattern_py)
    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    count_items_numba = count_pattern_numba = None
    HAS_NUMBA = False

if HAS_NUMBA and not config.DISABLE_NUMBA:
    BACKEND = "numba"
    count_items = count_items_numba
    count_pattern = count_pattern_numba
else:
    BACKEND = "numpy"
    count_items = count_items_numpy
    count_pattern = count_pattern_numpy

logger.debug("counting kernels backend: %s", BACKEND)


def warmup():
    """Trigger compilation (or cache load) so timings exclude it."""
    inc = np.ones((1, 1), dtype=np.uint8)
    off = np.array([0, 1], dtype=np.int64)
    idx = np.zeros(1, dtype=np.int64)
    # Database layouts are read-only, which numba types separately.
    inc.setflags(write=False)
    off.setflags(write=False)
    count_items(inc, off)
    count_pattern(inc, off, idx, idx[:0])
