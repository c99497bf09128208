"""Seedable, splittable random number generation.

All randomness in the package flows through counter-based Philox generators.
Experiments record a single 64-bit root seed; independent streams (one per
replication chunk or worker) are derived by spawning the root ``SeedSequence``,
so results are bit-reproducible and independent of the degree of parallelism.
"""

from __future__ import annotations

import numpy as np

__all__ = ["make_rng", "spawn_rngs", "spawn_seed_sequences", "fresh_seed"]


def make_rng(seed: int | np.random.SeedSequence | None) -> np.random.Generator:
    """Return a Philox-backed Generator for ``seed`` (fresh entropy if None)."""
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.Philox(seed))
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def spawn_seed_sequences(seed: int | None, n: int) -> list[np.random.SeedSequence]:
    """Derive ``n`` independent child seed sequences from a root seed."""
    return np.random.SeedSequence(seed).spawn(n)


def spawn_rngs(seed: int | None, n: int) -> list[np.random.Generator]:
    """Derive ``n`` independent Philox generators from a root seed."""
    return [np.random.Generator(np.random.Philox(s)) for s in spawn_seed_sequences(seed, n)]


def fresh_seed() -> int:
    """Draw a random 63-bit seed (used when a config omits one; always echoed)."""
    return int(np.random.SeedSequence().entropy % (2**63))
