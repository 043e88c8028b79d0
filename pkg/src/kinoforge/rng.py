"""Named, independently seeded random streams.

Every source of randomness in the workbench draws from a stream obtained
through :func:`stream`, keyed by a root seed plus a label path. Streams with
different labels are statistically independent and each is reproducible on
its own, so e.g. sensor noise can be replayed without re-running terrain
texture generation.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _label_entropy(labels: tuple) -> list[int]:
    digest = hashlib.sha256(repr(labels).encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]


def stream(seed: int, *labels) -> np.random.Generator:
    """Return a Generator for (seed, labels); same arguments, same stream.

    Labels may be strings or ints; they are hashed, so adding a new stream
    elsewhere never shifts an existing one.
    """
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFF] + _label_entropy(labels))
    return np.random.Generator(np.random.PCG64(ss))


def hash_u32(*values: int) -> int:
    """Deterministic 32-bit mix of integer values (splitmix-style).

    Used for seed-derived constants (texture phases etc.) where spawning a
    full Generator would be overkill.
    """
    x = 0x9E3779B9
    for v in values:
        x = (x ^ (int(v) & 0xFFFFFFFFFFFFFFFF)) * 0xBF58476D1CE4E5B9 % (1 << 64)
        x ^= x >> 31
        x = x * 0x94D049BB133111EB % (1 << 64)
        x ^= x >> 29
    return x & 0xFFFFFFFF
