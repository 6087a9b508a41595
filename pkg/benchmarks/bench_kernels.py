"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py --items 12 --slots 8 --tx-per-slot 2000

Reports per-call kernel times and a full exhaustive-oracle run under each
backend. Results of both backends are checked for equality before timing.
"""

import argparse
import time

import numpy as np

from spmine import _kernels, exact_mine
from spmine.bench import synthetic_database


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--items", type=int, default=12)
    ap.add_argument("--slots", type=int, default=8)
    ap.add_argument("--tx-per-slot", type=int, default=2000)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not _kernels.HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    db = synthetic_database(args.items, args.slots, args.tx_per_slot, args.seed, args.density)
    inc, off = db.incidence, db.offsets
    present = np.arange(min(3, db.n_items), dtype=np.int64)
    absent = np.arange(min(3, db.n_items), min(4, db.n_items), dtype=np.int64)

    backends = {
        "numpy": (_kernels.count_items_numpy, _kernels.count_pattern_numpy),
        "numba": (_kernels.count_items_numba, _kernels.count_pattern_numba),
    }
    # compile, and make sure both paths agree
    outs = {name: (ci(inc, off), cp(inc, off, present, absent)) for name, (ci, cp) in backends.items()}
    assert np.array_equal(outs["numpy"][0], outs["numba"][0])
    assert np.array_equal(outs["numpy"][1], outs["numba"][1])

    ref = np.full(db.n_slots, args.density)
    print(f"database: {db.n_items} items, {db.n_slots} slots, {len(db.transactions)} transactions")
    print(f"{'backend':8} {'count_items ms':>15} {'count_pattern ms':>17} {'oracle s':>10}")
    original = _kernels.count_pattern
    try:
        for name, (ci, cp) in backends.items():
            t_items = best_of(lambda: ci(inc, off), args.repeat)
            t_pattern = best_of(lambda: cp(inc, off, present, absent), args.repeat)
            _kernels.count_pattern = cp
            t_oracle = best_of(lambda: exact_mine(db, ref, 0.1), 1)
            print(f"{name:8} {t_items * 1e3:15.3f} {t_pattern * 1e3:17.3f} {t_oracle:10.3f}")
    finally:
        _kernels.count_pattern = original


if __name__ == "__main__":
    main()
