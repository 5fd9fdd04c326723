"""Dimension caps for the expensive code paths.

All caps can be overridden per call via explicit arguments; these are the
defaults the CLI reports with --version.
"""

# Largest ambient dimension a Z2Set may have (bitmap of 2**MAX_DIM cells).
MAX_DIM = 30

# Character-transform sumsets stay exact in int64 up to this dimension:
# intermediate butterfly values are bounded by 2**n * |A| * |B| <= 2**(3n).
TRANSFORM_CAP = 20

# Full fixpoint verification sweeps all 2**n index sets per round.
FIXPOINT_CAP = 12

# Exhaustive searches over affinely generating sets.
GEN_SEARCH_CAP = 4
COMPRESSED_SEARCH_CAP = 5
