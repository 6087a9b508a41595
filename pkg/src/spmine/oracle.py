"""Brute-force ground truth: one full pass per itemset, exhaustive enumeration.

Deliberately naive and independent of the bound machinery. Every call to
``true_support_sequence`` counts as one database pass.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import numpy as np

from . import _kernels, config
from .core import BoundedSupport, Itemset, PatternRecord, Status, TemporalDatabase, canonicalize, support_sequence
from .distance import euclidean, llb_distance, ulb_distance
from .errors import CapacityError, UnknownItem
from .scan import PassCounter


def _ids(db: TemporalDatabase, items: Iterable[int]) -> np.ndarray:
    ids = np.array(sorted(set(int(i) for i in items)), dtype=np.int64)
    bad = [int(i) for i in ids if not 0 <= i < db.n_items]
    if bad:
        raise UnknownItem(bad[0])
    return ids


def conjunction_support(
    db: TemporalDatabase,
    present: Iterable[int],
    absent: Iterable[int] = (),
    counter: PassCounter | None = None,
) -> np.ndarray:
    """Per-slot fraction of transactions containing all of ``present`` and none of ``absent``."""
    counts = _kernels.count_pattern(db.incidence, db.offsets, _ids(db, present), _ids(db, absent))
    if counter is not None:
        counter.tick()
    return support_sequence(counts / db.slot_sizes)


def true_support_sequence(db: TemporalDatabase, p: Itemset, counter: PassCounter | None = None) -> np.ndarray:
    return conjunction_support(db, canonicalize(p), (), counter)


def all_itemsets(n_items: int):
    for k in range(1, n_items + 1):
        yield from combinations(range(n_items), k)


def exact_mine(
    db: TemporalDatabase,
    ref,
    theta: float,
    epsilon: float = config.EPSILON,
    counter: PassCounter | None = None,
    with_sequences: list | None = None,
) -> list[PatternRecord]:
    """Every non-empty itemset whose true distance to ``ref`` is within ``theta``.

    If ``with_sequences`` is a list, ``(itemset, sequence)`` pairs for every
    enumerated itemset are appended to it.
    """
    if db.n_items > config.ORACLE_MAX_ITEMS:
        raise CapacityError(
            f"{db.n_items} items exceed the exhaustive oracle limit of {config.ORACLE_MAX_ITEMS}")
    out = []
    for p in all_itemsets(db.n_items):
        seq = true_support_sequence(db, p, counter)
        if with_sequences is not None:
            with_sequences.append((p, seq))
        dist = euclidean(seq, ref)
        if dist <= theta + epsilon:
            ulb = ulb_distance(ref, seq)
            llb = llb_distance(ref, seq)
            out.append(PatternRecord(
                itemset=p, bounds=BoundedSupport.exact(seq), ulb=ulb, llb=llb, lb=dist,
                status=Status.SIMILAR, exact=seq, actual_distance=dist))
    return out
