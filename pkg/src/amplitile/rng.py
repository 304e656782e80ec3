"""Deterministic random streams keyed by (seed, tags)."""

import hashlib
import os
import random

__all__ = ["stream", "env_seed", "positive_weights"]


def stream(seed, *tags):
    """Return a random.Random whose state depends only on seed and tags."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for t in tags:
        h.update(b"/")
        h.update(str(t).encode())
    return random.Random(int.from_bytes(h.digest()[:8], "big"))


def env_seed(default):
    """Seed from the AMPLITILE_SEED environment variable, else default."""
    v = os.environ.get("AMPLITILE_SEED")
    return int(v) if v not in (None, "") else int(default)


def positive_weights(rng, count, hi=9):
    """List of count random integers in [1, hi]."""
    return [rng.randint(1, hi) for _ in range(count)]
