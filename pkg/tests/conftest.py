from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from spmine import TemporalDatabase, load_database, parse_reference

DATA = Path(__file__).resolve().parent.parent / "data"
CASE_STUDY = DATA / "case_study.tsv"

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def case_db():
    return load_database(CASE_STUDY)


@pytest.fixture(scope="session")
def case_ref(case_db):
    return parse_reference("0.4,0.6", case_db.n_slots)


@pytest.fixture(scope="session")
def xyz(case_db):
    return tuple(case_db.item_ids[x] for x in "XYZ")


def random_instance(seed, max_items=6, max_slots=4, max_tx=30):
    """Small random database, reference and threshold; empty transactions allowed."""
    rng = np.random.default_rng(seed)
    n_items = int(rng.integers(1, max_items + 1))
    n_slots = int(rng.integers(1, max_slots + 1))
    per_slot = int(rng.integers(1, max_tx // n_slots + 1))
    density = rng.uniform(0.1, 0.9)
    labels = [f"i{i}" for i in range(n_items)]
    slots = []
    for s in range(n_slots):
        txs = [[labels[i] for i in np.flatnonzero(rng.random(n_items) < density)] for _ in range(per_slot)]
        slots.append((f"t{s}", txs))
    db = TemporalDatabase.from_slots(slots, items=labels)
    ref = rng.random(n_slots)
    theta = float(rng.uniform(0.0, 0.8))
    return db, ref, theta


@pytest.fixture
def criterion(request):
    results = request.config.stash.setdefault(_ACCEPTANCE, [])

    @contextmanager
    def run(label):
        try:
            yield
        except BaseException:
            results.append(f"FAIL  {label}")
            print(f"FAIL  {label}")
            raise
        results.append(f"PASS  {label}")
        print(f"PASS  {label}")

    return run


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_ACCEPTANCE, [])
    if results:
        terminalreporter.section("acceptance criteria")
        for line in sorted(results, key=lambda s: s.split("AC", 1)[-1]):
            terminalreporter.write_line(line)
