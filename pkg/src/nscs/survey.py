"""Census of minimal generating sets by embedding dimension.

Generating sets are grown in increasing order, carrying the membership table
of the current prefix up to ``max_gen``. A new generator only has to avoid
the prefix semigroup (smaller generators can never be sums of larger ones),
so minimality is checked incrementally, and a whole layer of candidates for
the last generator is tested at once with numpy.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from nscs.compound import criterion_holds
from nscs.errors import InvalidInput, WorkBudgetExceeded


@dataclass(frozen=True)
class SurveyResult:
    max_gen: int
    dim: int
    total: int
    compound: int
    arithmetic: int

    @property
    def compound_fraction(self) -> float:
        return self.compound / self.total if self.total else 0.0

    @property
    def arithmetic_fraction(self) -> float:
        return self.arithmetic / self.total if self.total else 0.0


def _extend(table: np.ndarray, g: int) -> np.ndarray:
    out = table.copy()
    for n in range(g, out.shape[0]):
        if out[n - g]:
            out[n] = True
    return out


def survey(max_gen: int, dim: int, budget: int | None = None) -> SurveyResult:
    """Count minimal generating sets ``n_0 < ... < n_{dim-1} <= max_gen`` with gcd 1.

    ``budget`` caps the number of prefixes explored (WorkBudgetExceeded beyond).
    """
    if max_gen < 1 or dim < 1:
        raise InvalidInput("max_gen and dim must be positive")
    table0 = np.zeros(max_gen + 1, dtype=bool)
    table0[0] = True
    counts = [0, 0, 0]
    visited = 0

    def leaves(prefix, table, g):
        cand = np.arange(prefix[-1] + 1, max_gen + 1)
        cand = cand[~table[cand]]
        cand = cand[np.gcd(cand, g) == 1]
        if cand.size == 0:
            return
        counts[0] += int(cand.size)
        if len(prefix) == 1:
            counts[1] += int(cand.size)  # every <a, b> is compound
            counts[2] += int(cand.size)  # and trivially arithmetic
            return
        for c in cand.tolist():
            if criterion_holds(prefix + [c]):
                counts[1] += 1
        d = prefix[1] - prefix[0]
        if all(y - x == d for x, y in zip(prefix, prefix[1:])):
            counts[2] += int(np.count_nonzero(cand == prefix[-1] + d))

    def grow(prefix, table, g):
        nonlocal visited
        visited += 1
        if budget is not None and visited > budget:
            raise WorkBudgetExceeded(visited, budget)
        if len(prefix) == dim - 1:
            leaves(prefix, table, g)
            return
        for c in range(prefix[-1] + 1, max_gen + 1):
            if not table[c]:
                grow(prefix + [c], _extend(table, c), gcd(g, c))

    if dim == 1:
        return SurveyResult(max_gen, dim, 1, 1, 1)  # only {1}
    for first in range(2, max_gen + 1):
        grow([first], _extend(table0, first), first)
    return SurveyResult(max_gen, dim, *counts)
