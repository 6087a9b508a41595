"""Shared value types: itemsets, temporal databases, support sequences and results."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ArityError, EmptyItemset, InvalidBounds, ParseError, RangeError, UnknownItem

Itemset = tuple[int, ...]

_FORBIDDEN = ("\t", ",", "\n", "\r")


def canonicalize(items: Iterable[int]) -> Itemset:
    """Return the canonical (sorted, duplicate-free) form of a collection of item ids."""
    result = tuple(sorted(set(int(i) for i in items)))
    if not result:
        raise EmptyItemset("an itemset needs at least one item")
    return result


def validate_label(label: str, what: str = "item label") -> str:
    if not label or label != label.strip() or any(c in label for c in _FORBIDDEN):
        raise ParseError(f"invalid {what} {label!r}")
    return label


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def support_sequence(values: Sequence[float], n: int | None = None) -> np.ndarray:
    """Validate per-slot support fractions and return them as a read-only float array."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ArityError("a support sequence is one-dimensional")
    if n is not None and arr.shape[0] != n:
        raise ArityError(f"expected {n} slot values, got {arr.shape[0]}")
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise RangeError(f"support values must lie in [0, 1]: {arr.tolist()}")
    return _frozen(arr)


def reference_sequence(values: Sequence[float], n: int) -> np.ndarray:
    """Reference sequences obey the same contract as support sequences."""
    return support_sequence(values, n)


@dataclass(frozen=True)
class TimeSlot:
    label: str
    transactions: tuple[frozenset[int], ...]


@dataclass(frozen=True, eq=False)
class TemporalDatabase:
    """Transactions tagged with a time slot, plus the label registry for items.

    ``transactions`` keeps input order as ``(slot_index, item_ids)`` pairs so a
    database can be written back out line for line. Slot order is the order of
    ``slot_labels``; item ids index into ``item_labels``.
    """

    slot_labels: tuple[str, ...]
    item_labels: tuple[str, ...]
    transactions: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        if len(set(self.slot_labels)) != len(self.slot_labels):
            raise ParseError("slot labels must be pairwise distinct")
        if len(set(self.item_labels)) != len(self.item_labels):
            raise ParseError("item labels must be pairwise distinct")
        for label in self.slot_labels:
            validate_label(label, "slot label")
        for label in self.item_labels:
            validate_label(label)
        n_items = len(self.item_labels)
        sizes = [0] * len(self.slot_labels)
        for slot, items in self.transactions:
            if not 0 <= slot < len(sizes):
                raise ParseError(f"transaction references unknown slot index {slot}")
            for i in items:
                if not 0 <= i < n_items:
                    raise UnknownItem(i)
            sizes[slot] += 1
        for label, size in zip(self.slot_labels, sizes):
            if size == 0:
                raise ParseError(f"time slot {label!r} has no transactions")

    @classmethod
    def from_slots(
        cls,
        slots: Mapping[str, Iterable[Iterable[str]]] | Iterable[tuple[str, Iterable[Iterable[str]]]],
        items: Iterable[str] = (),
    ) -> TemporalDatabase:
        """Build from slot label -> transactions of item labels.

        ``items`` preloads the registry, so items that never occur still get an id.
        """
        pairs = slots.items() if isinstance(slots, Mapping) else slots
        registry: dict[str, int] = {}
        for label in items:
            registry.setdefault(label, len(registry))
        slot_labels: list[str] = []
        transactions = []
        for slot_label, txs in pairs:
            if slot_label in slot_labels:
                raise ParseError(f"duplicate slot label {slot_label!r}")
            slot_labels.append(slot_label)
            for tx in txs:
                ids = frozenset(registry.setdefault(x, len(registry)) for x in tx)
                transactions.append((len(slot_labels) - 1, ids))
        return cls(tuple(slot_labels), tuple(registry), tuple(transactions))

    @property
    def n_slots(self) -> int:
        return len(self.slot_labels)

    @property
    def n_items(self) -> int:
        return len(self.item_labels)

    @cached_property
    def slots(self) -> tuple[TimeSlot, ...]:
        grouped: list[list[frozenset[int]]] = [[] for _ in self.slot_labels]
        for slot, items in self.transactions:
            grouped[slot].append(items)
        return tuple(TimeSlot(label, tuple(txs)) for label, txs in zip(self.slot_labels, grouped))

    @cached_property
    def slot_sizes(self) -> np.ndarray:
        return _frozen([len(s.transactions) for s in self.slots]).astype(np.int64)

    @cached_property
    def item_ids(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.item_labels)}

    @cached_property
    def _layout(self) -> tuple[np.ndarray, np.ndarray]:
        # Slot-grouped 0/1 incidence matrix and the row offset of every slot.
        incidence = np.zeros((len(self.transactions), self.n_items), dtype=np.uint8)
        row = 0
        for slot in self.slots:
            for items in slot.transactions:
                incidence[row, list(items)] = 1
                row += 1
        offsets = np.zeros(self.n_slots + 1, dtype=np.int64)
        offsets[1:] = np.cumsum(self.slot_sizes)
        incidence.setflags(write=False)
        offsets.setflags(write=False)
        return incidence, offsets

    @property
    def incidence(self) -> np.ndarray:
        return self._layout[0]

    @property
    def offsets(self) -> np.ndarray:
        return self._layout[1]

    def itemset(self, labels: Iterable[str]) -> Itemset:
        ids = []
        for label in labels:
            try:
                ids.append(self.item_ids[label])
            except KeyError:
                raise UnknownItem(label) from None
        return canonicalize(ids)

    def labels(self, itemset: Itemset) -> tuple[str, ...]:
        return tuple(self.item_labels[i] for i in itemset)

    def name(self, itemset: Itemset) -> str:
        labels = self.labels(itemset)
        sep = "" if all(len(x) == 1 for x in labels) else ","
        return sep.join(labels)

    def __eq__(self, other):
        if not isinstance(other, TemporalDatabase):
            return NotImplemented
        return (self.slot_labels, self.item_labels, self.transactions) == (
            other.slot_labels, other.item_labels, other.transactions)

    def __hash__(self):
        return hash((self.slot_labels, self.item_labels, self.transactions))


@dataclass(frozen=True, eq=False)
class BoundedSupport:
    """Per-slot envelope ``lower <= true support <= upper`` of an itemset."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64)
        upper = np.asarray(self.upper, dtype=np.float64)
        if lower.shape != upper.shape or lower.ndim != 1:
            raise ArityError(f"bound shapes differ: {lower.shape} vs {upper.shape}")
        if np.any(lower > upper):
            raise InvalidBounds(f"lower {lower.tolist()} exceeds upper {upper.tolist()}")
        object.__setattr__(self, "lower", _frozen(lower))
        object.__setattr__(self, "upper", _frozen(upper))

    @classmethod
    def exact(cls, seq) -> BoundedSupport:
        return cls(seq, seq)

    def __eq__(self, other):
        if not isinstance(other, BoundedSupport):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)


class Status(str, enum.Enum):
    SIMILAR = "similar"
    RETAINED_ONLY = "retained"
    DISSIMILAR = "dissimilar"


@dataclass(frozen=True, eq=False)
class PatternRecord:
    itemset: Itemset
    bounds: BoundedSupport
    ulb: float
    llb: float
    lb: float
    status: Status
    exact: np.ndarray | None = None
    actual_distance: float | None = None

    @property
    def level(self) -> int:
        return len(self.itemset)

    @property
    def retained(self) -> bool:
        return self.status is not Status.DISSIMILAR


@dataclass
class LevelStats:
    level: int
    generated: int = 0
    pruned: int = 0
    evaluated: int = 0
    retained: int = 0
    similar: int = 0


@dataclass
class MiningResult:
    similar: tuple[PatternRecord, ...]
    levels: list[LevelStats]
    scan_count: int
    evaluated: tuple[PatternRecord, ...] = ()
    retained: dict[int, tuple[Itemset, ...]] = field(default_factory=dict)

    def similar_itemsets(self) -> set[Itemset]:
        return {r.itemset for r in self.similar}

    def retained_itemsets(self) -> set[Itemset]:
        return {p for level in self.retained.values() for p in level}
