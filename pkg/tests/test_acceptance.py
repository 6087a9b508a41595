"""Exit criteria. Each test prints one PASS/FAIL line; the lines are also
collected into an "acceptance criteria" section of the pytest summary."""

import json
import math
from itertools import combinations, permutations

import numpy as np
import pytest

from spmine import (
    Combiner, MinerConfig, PassCounter, conjunction_support, euclidean, exact_mine,
    extend_bounds, lb_distance, llb_distance, mine, negative_sequence, scan_singleton_supports,
    true_support_sequence, ulb_distance,
)
from spmine.cli import main

from conftest import CASE_STUDY, random_instance

N_RANDOM = 500
TOL = 1e-9


@pytest.fixture(scope="module")
def random_dbs():
    return [random_instance(seed) for seed in range(N_RANDOM)]


def test_ac1_case_study_supports(case_db, xyz, criterion):
    with criterion("AC1 single-scan singleton supports and complements"):
        counter = PassCounter()
        s = scan_singleton_supports(case_db, counter)
        expected = {"X": ([0.6, 0.4], [0.4, 0.6]), "Y": ([0.3, 0.7], [0.7, 0.3]), "Z": ([0.8, 0.8], [0.2, 0.2])}
        for label, (pos, neg) in expected.items():
            seq = s[case_db.item_ids[label]]
            np.testing.assert_allclose(seq, pos, rtol=0, atol=1e-12)
            np.testing.assert_allclose(negative_sequence(seq), neg, rtol=0, atol=1e-12)
        assert counter.passes == 1


def test_ac2_level1_distances(case_db, case_ref, criterion):
    with criterion("AC2 level-1 actual and ULB distances"):
        result = mine(case_db, case_ref, MinerConfig(0.22))
        recs = {case_db.name(r.itemset): r for r in result.evaluated if r.level == 1}
        closed = {"X": (math.sqrt(0.08), 0.2), "Y": (math.sqrt(0.02), 0.1), "Z": (math.sqrt(0.2), 0.0)}
        rounded = {"X": 0.28, "Y": 0.14, "Z": 0.45}
        for name, (actual, ulb) in closed.items():
            assert abs(recs[name].actual_distance - actual) <= TOL
            assert abs(recs[name].ulb - ulb) <= TOL
            assert abs(recs[name].actual_distance - rounded[name]) <= 5e-3


def test_ac3_level2_bounds(case_db, case_ref, criterion):
    with criterion("AC3 level-2 envelopes and LB distances"):
        result = mine(case_db, case_ref, MinerConfig(0.22))
        recs = {case_db.name(r.itemset): r for r in result.evaluated if r.level == 2}
        expected = {
            "XY": ([0.0, 0.1], [0.3, 0.4], 0.2236),
            "XZ": ([0.4, 0.2], [0.6, 0.4], 0.2),
            "YZ": ([0.1, 0.5], [0.3, 0.7], 0.1),
        }
        assert set(recs) == set(expected)
        for name, (lower, upper, lb) in expected.items():
            np.testing.assert_allclose(recs[name].bounds.lower, lower, rtol=0, atol=1e-4)
            np.testing.assert_allclose(recs[name].bounds.upper, upper, rtol=0, atol=1e-4)
            assert abs(recs[name].lb - lb) <= 1e-4


def test_ac4_level3(case_db, case_ref, criterion):
    with criterion("AC4 XYZ never generated; on-demand extension gives LB 0.2236"):
        result = mine(case_db, case_ref, MinerConfig(0.22))
        xyz_set = case_db.itemset("XYZ")
        assert all(r.itemset != xyz_set for r in result.evaluated)
        assert case_db.itemset("XY") not in result.retained[2]
        s = scan_singleton_supports(case_db)
        xy = next(r.bounds for r in result.evaluated if r.itemset == case_db.itemset("XY"))
        b = extend_bounds(xy, s[case_db.item_ids["Z"]])
        np.testing.assert_allclose(b.lower, [0.0, 0.0], rtol=0, atol=1e-12)
        np.testing.assert_allclose(b.upper, [0.3, 0.4], rtol=0, atol=1e-12)
        lb = lb_distance(ulb_distance(case_ref, b.upper), llb_distance(case_ref, b.lower))
        assert abs(lb - 0.2236) <= 1e-4
        assert lb > 0.22


def test_ac5_end_to_end(capsys, criterion):
    with criterion("AC5 mine and oracle CLIs agree on {Y, XZ, YZ}"):
        base = ["--db", str(CASE_STUDY), "--ref", "0.4,0.6", "--theta", "0.22", "--output", "json"]
        assert main(["mine", *base]) == 0
        mined = json.loads(capsys.readouterr().out)
        assert main(["oracle", *base]) == 0
        oracle = json.loads(capsys.readouterr().out)
        assert mined["scan_count"] == 1
        names = lambda rep: {"".join(p["items"]) for p in rep["similar"]}  # noqa: E731
        assert names(mined) == names(oracle) == {"Y", "XZ", "YZ"}
        true_supports = {"X": [0.6, 0.4], "Y": [0.3, 0.7], "Z": [0.8, 0.8], "XY": [0.3, 0.3],
                  "XZ": [0.4, 0.4], "YZ": [0.3, 0.5], "XYZ": [0.3, 0.3]}
        seqs = {"".join(s["items"]): s["support"] for s in oracle["sequences"]}
        assert set(seqs) == set(true_supports)
        for name, seq in true_supports.items():
            np.testing.assert_allclose(seqs[name], seq, rtol=0, atol=1e-12)


def test_ac6_property_suite(random_dbs, criterion):
    with criterion(f"AC6 oracle-backed properties on {N_RANDOM} random databases"):
        checked = 0
        for db, ref, theta in random_dbs:
            assert db.n_items <= 6 and db.n_slots <= 4 and len(db.transactions) <= 30
            quad = mine(db, ref, MinerConfig(theta, combiner=Combiner.QUADRATURE))
            plain = mine(db, ref, MinerConfig(theta, combiner=Combiner.SUM))
            for rec in quad.evaluated + plain.evaluated:
                truth = true_support_sequence(db, rec.itemset)
                d = euclidean(truth, ref)
                # (a) envelope sandwich
                assert np.all(rec.bounds.lower <= truth + TOL)
                assert np.all(truth <= rec.bounds.upper + TOL)
                # (b) one-sided bound distances
                assert rec.ulb <= d + TOL
                assert rec.llb <= d + TOL
                # (c) quadrature combination
                assert math.hypot(rec.ulb, rec.llb) <= d + TOL
                checked += 1
            # (d) no false negatives with the quadrature combiner
            exact = {r.itemset for r in exact_mine(db, ref, theta)}
            assert exact <= quad.similar_itemsets()
        assert checked > N_RANDOM


def test_ac7_inclusion_exclusion(random_dbs, criterion):
    with criterion(f"AC7 pair inclusion-exclusion identity on {N_RANDOM} random databases"):
        for db, _, _ in random_dbs:
            for i, j in permutations(range(db.n_items), 2):
                both = conjunction_support(db, [i, j])
                lhs = conjunction_support(db, [i])
                without = conjunction_support(db, [i], [j])
                np.testing.assert_allclose(both, lhs - without, rtol=0, atol=1e-12)


def test_ac8_scan_accounting(case_db, case_ref, random_dbs, criterion):
    with criterion("AC8 pass counters: 1 for the miner, one per itemset for the oracle"):
        single, oracle = PassCounter(), PassCounter()
        assert mine(case_db, case_ref, MinerConfig(0.22), single).scan_count == 1
        exact_mine(case_db, case_ref, 0.22, counter=oracle)
        assert single.passes == 1 and oracle.passes == 7
        for db, ref, theta in random_dbs[:100]:
            single, oracle = PassCounter(), PassCounter()
            mine(db, ref, MinerConfig(theta), single)
            exact_mine(db, ref, theta, counter=oracle)
            assert single.passes == 1
            assert oracle.passes == 2 ** db.n_items - 1 == sum(
                1 for k in range(1, db.n_items + 1) for _ in combinations(range(db.n_items), k))
