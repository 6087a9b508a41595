"""Euclidean distance and the bound distances derived from support envelopes."""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import ArityError


class Combiner(str, enum.Enum):
    """How the upper- and lower-side bound distances are merged into one value.

    SUM adds them. QUADRATURE takes the root of the summed squares; since the two
    sides never share a slot, only the latter is a guaranteed lower bound on the
    true distance.
    """

    SUM = "sum"
    QUADRATURE = "quad"


def _pair(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ArityError(f"sequence lengths differ: {a.shape[0]} vs {b.shape[0]}")
    return a, b


def euclidean(a, b) -> float:
    a, b = _pair(a, b)
    return math.sqrt(float(np.sum((a - b) ** 2)))


def ulb_distance(ref, upper) -> float:
    """Distance over the slots where the reference lies strictly above the upper bound."""
    ref, upper = _pair(ref, upper)
    gap = np.where(ref > upper, ref - upper, 0.0)
    return math.sqrt(float(np.sum(gap * gap)))


def llb_distance(ref, lower) -> float:
    """Distance over the slots where the reference lies strictly below the lower bound."""
    ref, lower = _pair(ref, lower)
    gap = np.where(ref < lower, lower - ref, 0.0)
    return math.sqrt(float(np.sum(gap * gap)))


def lb_distance(ulb: float, llb: float, combiner: Combiner = Combiner.SUM) -> float:
    combiner = Combiner(combiner)
    if combiner is Combiner.SUM:
        return ulb + llb
    return math.hypot(ulb, llb)
