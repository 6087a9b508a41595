"""Reading and writing temporal transaction files.

One transaction per line::

    slot_label<TAB>item[,item...]

With ``with_tid=True`` a leading transaction-id column is accepted and ignored.
Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import os

import numpy as np

from .core import TemporalDatabase, reference_sequence, validate_label
from .errors import ArityError, EmptyDatabase, ParseError


def parse_database(text: str, with_tid: bool = False) -> TemporalDatabase:
    n_fields = 3 if with_tid else 2
    slot_index: dict[str, int] = {}
    registry: dict[str, int] = {}
    transactions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != n_fields:
            raise ParseError(f"expected {n_fields} tab-separated fields, got {len(fields)}", lineno)
        slot_label = fields[-2].strip()
        if not slot_label:
            raise ParseError("empty slot label", lineno)
        tokens = [t.strip() for t in fields[-1].split(",")]
        if not any(tokens):
            raise ParseError("transaction has no items", lineno)
        if not all(tokens):
            raise ParseError("empty item token", lineno)
        for token in tokens:
            try:
                validate_label(token)
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
        slot = slot_index.setdefault(slot_label, len(slot_index))
        ids = frozenset(registry.setdefault(t, len(registry)) for t in tokens)
        transactions.append((slot, ids))
    if not transactions:
        raise EmptyDatabase("no transactions found")
    return TemporalDatabase(tuple(slot_index), tuple(registry), tuple(transactions))


def load_database(path: str | os.PathLike, with_tid: bool = False) -> TemporalDatabase:
    with open(path, encoding="utf-8") as fh:
        return parse_database(fh.read(), with_tid=with_tid)


def dump_database(db: TemporalDatabase, with_tid: bool = False) -> str:
    """Serialize ``db`` in input order; ``parse_database`` reads it back unchanged."""
    lines = []
    for tid, (slot, items) in enumerate(db.transactions, start=1):
        fields = [db.slot_labels[slot], ",".join(db.item_labels[i] for i in sorted(items))]
        if with_tid:
            fields.insert(0, str(tid))
        lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def parse_reference(text: str, n: int) -> np.ndarray:
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for token in tokens:
        try:
            values.append(float(token))
        except ValueError:
            raise ParseError(f"not a number: {token!r}") from None
    if len(values) != n:
        raise ArityError(f"reference has {len(values)} values but the database has {n} slots")
    return reference_sequence(values, n)
