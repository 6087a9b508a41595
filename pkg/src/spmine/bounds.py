"""Support-sequence envelopes for conjunctions, built from singleton sequences only."""

from __future__ import annotations

import numpy as np

from .core import BoundedSupport
from .errors import ArityError


def _pair(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ArityError(f"sequence lengths differ: {a.shape[0]} vs {b.shape[0]}")
    return a, b


def ubsts(a, b) -> np.ndarray:
    """Largest possible support of a conjunction: per-slot ``min(a, b)``."""
    a, b = _pair(a, b)
    return np.minimum(a, b)


def lbsts(a, b) -> np.ndarray:
    """Smallest possible support of a conjunction: per-slot ``max(a + b - 1, 0)``."""
    a, b = _pair(a, b)
    # a + b - 1 can round past min(a, b); cap it there.
    return np.minimum(np.maximum(a + b - 1.0, 0.0), np.minimum(a, b))


def _candidates(prefix, complement):
    # Support of P∧J is support(P) minus support(P∧¬J); the latter is only known up to its envelope.
    return (
        np.clip(prefix - ubsts(prefix, complement), 0.0, 1.0),
        np.clip(prefix - lbsts(prefix, complement), 0.0, 1.0),
    )


def pair_bounds(s_i, s_j) -> BoundedSupport:
    """Envelope of S(I_i ∧ I_j) from two exact sequences, decomposing on ``I_j``."""
    s_i, s_j = _pair(s_i, s_j)
    lo, hi = _candidates(s_i, 1.0 - s_j)
    return BoundedSupport(np.minimum(lo, hi), np.maximum(lo, hi))


def extend_bounds(b_i: BoundedSupport, s_j) -> BoundedSupport:
    """Envelope of ``P ∧ I_j`` when P itself is only known through ``b_i``.

    Both ends of ``b_i`` are pushed through the pair decomposition, and the
    result is the per-slot extremum of the four sequences obtained.
    """
    cases = extension_cases(b_i, s_j)
    return BoundedSupport(cases.min(axis=0), cases.max(axis=0))


def extension_cases(b_i: BoundedSupport, s_j) -> np.ndarray:
    """The four candidate sequences behind ``extend_bounds``, shape (4, n_slots)."""
    lower, s_j = _pair(b_i.lower, s_j)
    complement = 1.0 - s_j
    return np.stack(_candidates(lower, complement) + _candidates(np.asarray(b_i.upper), complement))
