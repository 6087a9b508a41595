import numpy as np
import pytest
from hypothesis import given, strategies as st

from spmine import (
    ArityError, BoundedSupport, EmptyItemset, InvalidBounds, ParseError, RangeError, TemporalDatabase,
    UnknownItem, canonicalize, reference_sequence, support_sequence,
)


@pytest.mark.parametrize("items, expected", [([2, 0, 1], (0, 1, 2)), ([5, 5], (5,)), ((3,), (3,))])
def test_canonicalize(items, expected):
    assert canonicalize(items) == expected


def test_canonicalize_empty():
    with pytest.raises(EmptyItemset):
        canonicalize([])


@given(st.lists(st.integers(0, 50), min_size=1))
def test_canonicalize_idempotent(items):
    once = canonicalize(items)
    assert canonicalize(once) == once
    assert list(once) == sorted(set(once))


def test_itemset_from_labels_is_order_free(case_db):
    assert case_db.itemset("ZX") == case_db.itemset(["X", "Z"]) == canonicalize([0, 2])
    with pytest.raises(UnknownItem):
        case_db.itemset(["Q"])


def test_bounded_support_rejects_crossed_envelope():
    with pytest.raises(InvalidBounds):
        BoundedSupport([0.5, 0.2], [0.4, 0.3])
    with pytest.raises(ArityError):
        BoundedSupport([0.1], [0.2, 0.3])
    b = BoundedSupport([0.1, 0.2], [0.1, 0.3])
    assert not b.lower.flags.writeable


def test_support_sequence_contract():
    assert support_sequence([0.0, 1.0]).tolist() == [0.0, 1.0]
    with pytest.raises(RangeError):
        support_sequence([1.2])
    with pytest.raises(RangeError):
        reference_sequence([float("nan"), 0.1], 2)
    with pytest.raises(ArityError):
        reference_sequence([0.1], 2)


def test_database_invariants():
    db = TemporalDatabase.from_slots({"a": [["x", "y"], ["y"]], "b": [["z"]]})
    assert db.item_labels == ("x", "y", "z")
    assert db.slot_labels == ("a", "b")
    assert [len(s.transactions) for s in db.slots] == [2, 1]
    assert db.incidence.tolist() == [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert db.offsets.tolist() == [0, 2, 3]
    with pytest.raises(ParseError):
        TemporalDatabase(("a", "a"), ("x",), ((0, frozenset({0})),))
    with pytest.raises(ParseError):
        TemporalDatabase(("a", "b"), ("x",), ((0, frozenset({0})),))
    with pytest.raises(UnknownItem):
        TemporalDatabase(("a",), ("x",), ((0, frozenset({3})),))
    with pytest.raises(ParseError):
        TemporalDatabase.from_slots({"a": [["x,y"]]})


def test_preloaded_items_get_ids():
    db = TemporalDatabase.from_slots({"a": [["y"]]}, items=["x", "y"])
    assert db.item_ids == {"x": 0, "y": 1}
    assert db.incidence.tolist() == [[0, 1]]


def test_slot_order_follows_input_when_interleaved():
    db = TemporalDatabase.from_slots([("b", [["x"]]), ("a", [["y"]])])
    assert db.slot_labels == ("b", "a")
    np.testing.assert_array_equal(db.slot_sizes, [1, 1])
