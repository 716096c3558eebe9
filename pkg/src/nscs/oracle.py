"""Brute-force ground truth for arbitrary numerical semigroups.

Nothing in here uses compound-sequence structure: membership is the coin
problem dynamic program, fibers come from exhaustive enumeration, and every
factorization invariant is evaluated straight from its definition. Scans take
an explicit bound and report how long their aggregate has been stable; they
never claim more than they computed.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Any, NamedTuple, Sequence

import numpy as np

from nscs import kernels
from nscs.compound import GeneratorList
from nscs.errors import NotAnElement, NotInSemigroup, WorkBudgetExceeded
from nscs.factorization import Factorization, Trade

#: Default maximum fiber size for any enumeration.
DEFAULT_BUDGET = 50_000
#: Above this the membership table is not grown; single queries fall back to search.
TABLE_CAP = 1 << 24


class GenericSemigroup:
    """A semigroup given by generators, with a lazily grown membership table.

    ``check_gcd=False`` admits generator sets with gcd > 1 (used internally for
    sub-semigroups during minimality tests).
    """

    def __init__(self, gens: GeneratorList | Sequence[int], check_gcd: bool = True):
        if check_gcd and not isinstance(gens, GeneratorList):
            gens = GeneratorList(gens)
        self.gens = tuple(int(g) for g in gens)
        self.array = np.array(self.gens, dtype=np.int64)
        self.gcd = reduce(gcd, self.gens)
        self._lock = threading.Lock()
        self._table = np.ones(1, dtype=bool)
        self._frobenius = None

    def __repr__(self):
        return f"GenericSemigroup({list(self.gens)})"

    @property
    def limit(self) -> int:
        return self._table.shape[0] - 1

    def table(self, limit: int) -> np.ndarray:
        """Membership flags for 0..limit (a prefix of the cached table)."""
        with self._lock:
            if limit > self.limit:
                new = max(limit, 2 * self.limit, 1024)
                self._table = kernels.membership_table(self.array, new)
            return self._table[: limit + 1]

    def contains(self, n: int) -> bool:
        n = int(n)
        if n < 0 or n % self.gcd:
            return False
        if n <= TABLE_CAP:
            return bool(self.table(n)[n])
        return bool(kernels.first_factorization(self.array, n)[1])

    def frobenius(self) -> int:
        if self.gcd != 1:
            raise ValueError("Frobenius number needs gcd 1")
        if self._frobenius is None:
            m = min(self.gens)
            limit = 4 * max(self.gens)
            while True:
                table = self.table(limit)
                gaps = np.flatnonzero(~table)
                f = int(gaps[-1]) if gaps.size else -1
                if limit - f >= m:
                    break
                limit *= 2
            self._frobenius = f
        return self._frobenius

    def factorizations(self, n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        """All factorizations of ``n`` as rows sorted lexicographically."""
        if n < 0:
            return np.empty((0, len(self.gens)), dtype=np.int64)
        X, ok = kernels.factorizations(self.array, int(n), int(budget))
        if not ok:
            raise WorkBudgetExceeded(n, budget)
        if X.shape[0] > 1:
            X = X[np.lexsort(X.T[::-1])]
        return X


def _as_semigroup(G) -> GenericSemigroup:
    if isinstance(G, GenericSemigroup):
        return G
    return GenericSemigroup(getattr(G, "n", G))


def membership(G, n: int) -> bool:
    return _as_semigroup(G).contains(n)


def frobenius_oracle(G) -> int:
    return _as_semigroup(G).frobenius()


def genus_oracle(G) -> int:
    G = _as_semigroup(G)
    f = G.frobenius()
    if f < 0:
        return 0
    return int((~G.table(f)).sum())


def apery_oracle(G, m: int) -> frozenset[int]:
    """Least element of each residue class mod ``m``."""
    G = _as_semigroup(G)
    if m <= 0 or not G.contains(m):
        raise NotAnElement(f"{m} is not a positive element of {list(G.gens)}")
    top = max(G.frobenius(), 0) + m
    members = np.flatnonzero(G.table(top))
    _, first = np.unique(members % m, return_index=True)
    return frozenset(int(v) for v in members[first])


def _fiber(G: GenericSemigroup, n: int, budget: int) -> np.ndarray:
    X = G.factorizations(n, budget)
    if X.shape[0] == 0:
        raise NotInSemigroup(n, G.gens)
    return X


def catenary_oracle(G, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """c(n): the bottleneck of a minimum spanning tree of the fiber under d."""
    G = _as_semigroup(G)
    return int(kernels.catenary_of_fiber(_fiber(G, n, budget)))


def tame_oracle(G, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """t(n) with empty ``phi_i^{-1}(n)`` skipped."""
    G = _as_semigroup(G)
    return int(kernels.tame_of_fiber(_fiber(G, n, budget)))


def delta_of_element(G, n: int, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    G = _as_semigroup(G)
    return frozenset(int(v) for v in kernels.length_gaps(_fiber(G, n, budget)))


@dataclass
class ScanReport:
    """Result of scanning every element 0..bound.

    ``values`` only holds elements with a nontrivial value (positive degree,
    nonempty delta set); ``last_change`` is the element at which the
    aggregate last grew, and ``stable_tail = bound - last_change``.
    """

    bound: int
    values: dict[int, Any]
    aggregate: Any
    last_change: int
    argmax: list[int] = field(default_factory=list)

    @property
    def stable_tail(self) -> int:
        return self.bound - self.last_change


def _check(failed_at: int, budget: int):
    if failed_at >= 0:
        raise WorkBudgetExceeded(failed_at, budget)


def _max_scan(values: np.ndarray, bound: int) -> ScanReport:
    members = values >= 0
    agg = int(values.max()) if members.any() else 0
    running = np.maximum.accumulate(np.where(members, values, 0))
    grew = np.flatnonzero(np.diff(running) > 0) + 1
    last = int(grew[-1]) if grew.size else 0
    nz = np.flatnonzero(values > 0)
    return ScanReport(
        bound=bound,
        values={int(n): int(values[n]) for n in nz},
        aggregate=agg,
        last_change=last,
        argmax=[int(n) for n in np.flatnonzero(values == agg)] if agg > 0 else [],
    )


def catenary_scan(G, bound: int, budget: int = DEFAULT_BUDGET) -> ScanReport:
    """c(n) for every n <= bound; aggregate is the maximum."""
    G = _as_semigroup(G)
    values, failed = kernels.scan_catenary(G.array, int(bound), int(budget))
    _check(failed, budget)
    return _max_scan(values, bound)


def tame_scan(G, bound: int, budget: int = DEFAULT_BUDGET) -> ScanReport:
    """t(n) for every 0 < n <= bound; aggregate is the maximum."""
    G = _as_semigroup(G)
    values, failed = kernels.scan_tame(G.array, int(bound), int(budget))
    _check(failed, budget)
    return _max_scan(values, bound)


def delta_scan(G, bound: int, budget: int = DEFAULT_BUDGET) -> ScanReport:
    """Union of the element delta sets over n <= bound."""
    G = _as_semigroup(G)
    offsets, data, failed = kernels.scan_delta(G.array, int(bound), int(budget))
    _check(failed, budget)
    values = {}
    union: set[int] = set()
    last = 0
    for n in np.flatnonzero(np.diff(offsets) > 0):
        d = frozenset(int(v) for v in data[offsets[n]:offsets[n + 1]])
        values[int(n)] = d
        if not d <= union:
            union |= d
            last = int(n)
    return ScanReport(bound=bound, values=values, aggregate=frozenset(union), last_change=last)


class BettiResult(NamedTuple):
    betti: frozenset[int]
    presentation_size: int
    relations: tuple[Trade, ...]
    components: dict[int, int]


def _representative(rows: np.ndarray) -> tuple[int, ...]:
    # fewest generators first, then lexicographically smallest
    best = min(rows.tolist(), key=lambda r: (sum(1 for v in r if v), r))
    return tuple(best)


def betti_oracle(G, bound: int, budget: int = DEFAULT_BUDGET) -> BettiResult:
    """Betti elements up to ``bound`` and the minimal presentation they induce.

    n is Betti iff its shared-support graph is disconnected. For each Betti
    element the components are ordered by their representative (smallest
    support, then lexicographic) and consecutive representatives are linked,
    giving ``components - 1`` relations.
    """
    G = _as_semigroup(G)
    counts, failed = kernels.scan_components(G.array, int(bound), int(budget))
    _check(failed, budget)
    betti = [int(n) for n in np.flatnonzero(counts > 1)]
    relations = []
    for n in betti:
        X = G.factorizations(n, budget)
        _, labels = kernels.support_components(X)
        reps = sorted(
            (_representative(X[labels == c]) for c in range(int(counts[n]))),
            key=lambda r: r,
        )
        relations.extend(Trade(Factorization(u), Factorization(v)) for u, v in zip(reps, reps[1:]))
    return BettiResult(
        betti=frozenset(betti),
        presentation_size=int(sum(int(counts[n]) - 1 for n in betti)),
        relations=tuple(relations),
        components={n: int(counts[n]) for n in betti},
    )
