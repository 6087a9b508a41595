"""Runtime switches read once at import time."""

import os

# Set SPMINE_DISABLE_NUMBA=1 to run the pure-numpy kernels instead of the jitted ones.
DISABLE_NUMBA = os.environ.get("SPMINE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

# Absolute slack used for every "distance <= theta" comparison.
EPSILON = 1e-9

# exact_mine enumerates 2**n - 1 itemsets; refuse beyond this many items.
ORACLE_MAX_ITEMS = 20
