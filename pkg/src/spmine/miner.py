"""Level-wise single-scan miner.

Level 1 uses the exact singleton sequences from the one database pass. Every
higher level works from support envelopes only: a candidate ``P + j`` gets its
envelope from P's envelope and the exact sequence of singleton ``j``, and is
judged by its lower-bound distance to the reference. A pattern whose
upper-side bound distance stays within the threshold is retained as a seed
for the next level even when it is not reported as similar.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import config
from .bounds import extend_bounds, pair_bounds
from .core import (
    BoundedSupport, Itemset, LevelStats, MiningResult, PatternRecord, Status, TemporalDatabase,
)
from .distance import Combiner, euclidean, lb_distance, llb_distance, ulb_distance
from .errors import ArityError, RangeError
from .oracle import true_support_sequence
from .scan import PassCounter, singleton_support_matrix

logger = logging.getLogger(__name__)


class Mode(str, enum.Enum):
    PAPER = "paper"  # levels >= 2 decided on bounds alone
    EXACT = "exact"  # levels >= 2 decided on oracle-counted supports


@dataclass(frozen=True)
class MinerConfig:
    theta: float
    combiner: Combiner = Combiner.SUM
    mode: Mode = Mode.PAPER
    epsilon: float = config.EPSILON

    def __post_init__(self):
        if not self.theta >= 0:
            raise RangeError(f"theta must be >= 0, got {self.theta}")
        if not self.epsilon >= 0:
            raise RangeError(f"epsilon must be >= 0, got {self.epsilon}")
        object.__setattr__(self, "combiner", Combiner(self.combiner))
        object.__setattr__(self, "mode", Mode(self.mode))

    def within(self, distance: float) -> bool:
        return distance <= self.theta + self.epsilon


def _extend(retained_prev: Iterable[Itemset], retained_singletons: Iterable[int]) -> tuple[list[Itemset], int]:
    prev = sorted(set(tuple(p) for p in retained_prev))
    singles = sorted(set(int(i) for i in retained_singletons))
    seen = set(prev)
    out, pruned = [], 0
    for p in prev:
        for j in singles:
            if j <= p[-1]:
                continue
            cand = p + (j,)
            # Every (k-1)-subset must have survived the previous level.
            if all(sub in seen for sub in combinations(cand, len(cand) - 1)):
                out.append(cand)
            else:
                pruned += 1
    return out, pruned


def generate_candidates(retained_prev: Iterable[Itemset], retained_singletons: Iterable[int]) -> list[Itemset]:
    """Prefix-extend each retained pattern with every larger retained singleton id,
    dropping candidates that have a non-retained (k-1)-subset."""
    return _extend(retained_prev, retained_singletons)[0]


def _classify(cfg: MinerConfig, decide: float, ulb: float) -> Status:
    if cfg.within(decide):
        return Status.SIMILAR
    if cfg.within(ulb):
        return Status.RETAINED_ONLY
    return Status.DISSIMILAR


def mine(db: TemporalDatabase, ref, cfg: MinerConfig, counter: PassCounter | None = None) -> MiningResult:
    ref = np.asarray(ref, dtype=np.float64)
    if ref.shape != (db.n_slots,):
        raise ArityError(f"reference has {ref.shape[0]} values but the database has {db.n_slots} slots")
    counter = counter if counter is not None else PassCounter()

    supports = singleton_support_matrix(db, counter)
    evaluated: list[PatternRecord] = []
    levels: list[LevelStats] = []
    retained: dict[int, tuple[Itemset, ...]] = {}

    stats = LevelStats(level=1, generated=db.n_items, evaluated=db.n_items)
    frontier: dict[Itemset, BoundedSupport] = {}
    for i in range(db.n_items):
        seq = supports[i]
        ulb = ulb_distance(ref, seq)
        llb = llb_distance(ref, seq)
        actual = euclidean(seq, ref)
        rec = PatternRecord(
            itemset=(i,), bounds=BoundedSupport.exact(seq), ulb=ulb, llb=llb,
            lb=lb_distance(ulb, llb, cfg.combiner), status=_classify(cfg, actual, ulb),
            exact=seq, actual_distance=actual)
        evaluated.append(rec)
        if rec.retained:
            frontier[rec.itemset] = rec.bounds
    stats.retained = len(frontier)
    stats.similar = sum(r.status is Status.SIMILAR for r in evaluated)
    levels.append(stats)
    retained[1] = tuple(frontier)
    singles = [p[0] for p in frontier]

    k = 1
    while frontier and k < db.n_items:
        k += 1
        candidates, pruned = _extend(frontier, singles)
        stats = LevelStats(level=k, generated=len(candidates) + pruned, pruned=pruned, evaluated=len(candidates))
        next_frontier: dict[Itemset, BoundedSupport] = {}
        for cand in candidates:
            prefix, j = cand[:-1], cand[-1]
            if k == 2:
                bounds = pair_bounds(supports[prefix[0]], supports[j])
            else:
                bounds = extend_bounds(frontier[prefix], supports[j])
            ulb = ulb_distance(ref, bounds.upper)
            llb = llb_distance(ref, bounds.lower)
            lb = lb_distance(ulb, llb, cfg.combiner)
            exact = actual = None
            if cfg.mode is Mode.EXACT:
                exact = true_support_sequence(db, cand, counter)
                actual = euclidean(exact, ref)
            rec = PatternRecord(
                itemset=cand, bounds=bounds, ulb=ulb, llb=llb, lb=lb,
                status=_classify(cfg, lb if actual is None else actual, ulb),
                exact=exact, actual_distance=actual)
            evaluated.append(rec)
            stats.similar += rec.status is Status.SIMILAR
            if cfg.within(ulb):
                next_frontier[cand] = bounds
        stats.retained = len(next_frontier)
        levels.append(stats)
        retained[k] = tuple(next_frontier)
        logger.debug("level %d: %s", k, stats)
        frontier = next_frontier

    similar = tuple(r for r in evaluated if r.status is Status.SIMILAR)
    return MiningResult(similar=similar, levels=levels, scan_count=counter.passes,
                        evaluated=tuple(evaluated), retained=retained)
