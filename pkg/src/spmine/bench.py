"""Seeded synthetic workloads and the bound-miner vs. oracle comparison."""

from __future__ import annotations

import time

import numpy as np

from . import _kernels
from .core import TemporalDatabase
from .distance import Combiner
from .errors import ParseError, RangeError
from .miner import MinerConfig, Mode, mine
from .oracle import exact_mine
from .scan import PassCounter

SYNTHETIC_KEYS = {"items": int, "slots": int, "tx-per-slot": int, "seed": int, "density": float}


def parse_synthetic(text: str) -> dict:
    """Parse ``items=6,slots=4,tx-per-slot=20,seed=1,density=0.3``."""
    params = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in SYNTHETIC_KEYS:
            raise ParseError(f"bad synthetic parameter {part!r}; expected keys {sorted(SYNTHETIC_KEYS)}")
        try:
            params[key] = SYNTHETIC_KEYS[key](value.strip())
        except ValueError:
            raise ParseError(f"bad value for {key}: {value!r}") from None
    missing = set(SYNTHETIC_KEYS) - set(params)
    if missing:
        raise ParseError(f"missing synthetic parameters: {sorted(missing)}")
    return params


def synthetic_database(items: int, slots: int, tx_per_slot: int, seed: int, density: float) -> TemporalDatabase:
    """Each item joins each transaction independently with probability ``density``.

    Empty draws are redrawn, so transactions always hold at least one item. All
    ``items`` labels (``i0``, ``i1``, ...) are registered even if never drawn.
    """
    if items < 1 or slots < 1 or tx_per_slot < 1:
        raise RangeError("items, slots and tx-per-slot must all be >= 1")
    if not 0.0 < density <= 1.0:
        raise RangeError(f"density must be in (0, 1], got {density}")
    rng = np.random.default_rng(seed)
    labels = [f"i{i}" for i in range(items)]
    data = []
    for s in range(slots):
        txs = []
        while len(txs) < tx_per_slot:
            row = rng.random(items) < density
            if row.any():
                txs.append([labels[i] for i in np.flatnonzero(row)])
        data.append((f"t{s + 1}", txs))
    return TemporalDatabase.from_slots(data, items=labels)


def compare(db: TemporalDatabase, ref, theta: float, combiner=Combiner.SUM) -> dict:
    """Run the single-scan miner and the exhaustive oracle on the same input."""
    _kernels.warmup()
    paper_counter = PassCounter()
    t0 = time.perf_counter()
    result = mine(db, ref, MinerConfig(theta, combiner=combiner, mode=Mode.PAPER), paper_counter)
    paper_seconds = time.perf_counter() - t0

    oracle_counter = PassCounter()
    t0 = time.perf_counter()
    exact = exact_mine(db, ref, theta, counter=oracle_counter)
    oracle_seconds = time.perf_counter() - t0

    found = result.similar_itemsets()
    truth = {r.itemset for r in exact}
    return {
        "paper": {
            "passes": paper_counter.passes,
            "candidates": {s.level: s.evaluated for s in result.levels},
            "seconds": paper_seconds,
            "similar": len(found),
        },
        "oracle": {
            "passes": oracle_counter.passes,
            "seconds": oracle_seconds,
            "similar": len(truth),
        },
        "false_positives": sorted(db.name(p) for p in found - truth),
        "false_negatives": sorted(db.name(p) for p in truth - found),
        "backend": _kernels.BACKEND,
    }
