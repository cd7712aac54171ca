"""Tunable bounds and conventions, overridable from a plain key=value file.

``TWIST_SIGN`` fixes the global handedness convention of Dehn twists (each
core's own stored orientation provides the per-curve part of the convention).
Bounds are the documented defaults used by the verification suites.
"""

TWIST_SIGN = 1

# weight bound used by small-surface censuses
CENSUS_BOUND = 8

# weight bound for unique-curve searches backed by global enumeration
UNIQUE_BOUND = 10

# weight bound for bounded maximality evidence (pants decompositions)
PANTS_BOUND = 8

# exhaustion coverage: every class of weight <= COVER_WEIGHT must appear in
# some E_k with k <= COVER_DEPTH
COVER_WEIGHT = 6
COVER_DEPTH = 3

# word-search radius for induced-by-homeomorphism certificates
WORD_RADIUS = 2


def load(path):
    """Apply key=value overrides from a plain text file."""
    import sys
    mod = sys.modules[__name__]
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip().upper()
            if not hasattr(mod, key):
                raise KeyError(f"unknown config key {key!r}")
            setattr(mod, key, int(value.strip()))
