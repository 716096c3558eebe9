"""Seeded random compound sequences for property checks."""
from __future__ import annotations

import random
from math import gcd

from nscs.compound import CompoundSequence, from_pairs


def random_compound(rng: random.Random, max_p: int = 3, a_range=(2, 9), spread: int = 12,
                    max_gen: int = 10**5) -> CompoundSequence:
    """One compound sequence: ``p`` uniform in 1..max_p, ``a_i`` in a_range,
    ``b_i`` in ``[a_i + 1, a_i + spread]``.

    Pairs breaking coprimality with earlier ``b_j`` are redrawn; sequences whose
    largest generator exceeds ``max_gen`` are rejected as a whole.
    """
    while True:
        p = rng.randint(1, max_p)
        pairs = []
        bs = []
        for _ in range(p):
            while True:
                a = rng.randint(*a_range)
                b = rng.randint(a + 1, a + spread)
                if all(gcd(a, bj) == 1 for bj in bs + [b]):
                    break
            pairs.append((a, b))
            bs.append(b)
        S = from_pairs(pairs)
        if S.n[-1] <= max_gen:
            return S


def random_compounds(seed: int, count: int, **kwargs) -> list[CompoundSequence]:
    rng = random.Random(seed)
    return [random_compound(rng, **kwargs) for _ in range(count)]
