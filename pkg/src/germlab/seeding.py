"""Deterministic derivation of child RNG streams.

Child seeds are digests of the parent seed plus a label, so parallel trials
and nested samplers cannot interfere with one another and every run is
reproducible from the seed recorded in its report.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(*parts) -> int:
    label = ":".join(repr(p) for p in parts)
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(*parts) -> random.Random:
    return random.Random(derive_seed(*parts))
