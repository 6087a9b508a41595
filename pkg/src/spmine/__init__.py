"""Single-scan mining of temporal association patterns whose support time
sequence stays close to a reference sequence."""

from .bounds import extend_bounds, lbsts, pair_bounds, ubsts
from .core import (
    BoundedSupport, Itemset, LevelStats, MiningResult, PatternRecord, Status, TemporalDatabase, TimeSlot,
    canonicalize, reference_sequence, support_sequence,
)
from .distance import Combiner, euclidean, lb_distance, llb_distance, ulb_distance
from .errors import (
    ArityError, CapacityError, EmptyDatabase, EmptyItemset, InvalidBounds, ParseError, RangeError,
    SpmineError, UnknownItem,
)
from .ingest import dump_database, load_database, parse_database, parse_reference
from .miner import MinerConfig, Mode, generate_candidates, mine
from .oracle import conjunction_support, exact_mine, true_support_sequence
from .scan import PassCounter, negative_sequence, scan_singleton_supports

__version__ = "0.1.0"
