"""Factorizations, basic swaps, normal forms and basic chains.

Swap orientation: applying ``delta_i = (a_i e_i, b_i e_{i-1})`` to x trades
``b_i`` copies of generator i-1 for ``a_i`` copies of generator i, so it
shortens x by ``b_i - a_i``; ``delta_i'`` is the inverse trade. In general a
trade ``(lhs, rhs)`` applied to x gives ``x + lhs - rhs``.
"""
from __future__ import annotations

from math import prod
from typing import Iterable, Literal, NamedTuple, Sequence

import numpy as np

from nscs import kernels
from nscs.compound import CompoundSequence, check_int64
from nscs.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidInput,
    NotApplicable,
    NotInSemigroup,
    NotSameElement,
    WorkBudgetExceeded,
)

DEFAULT_BUDGET = 50_000

Mode = Literal["left", "right"]


class Factorization(tuple):
    """A vector of nonnegative generator multiplicities."""

    def __new__(cls, coords: Iterable[int]):
        coords = tuple(int(c) for c in coords)
        if any(c < 0 for c in coords):
            raise InvalidInput(f"factorization coordinates must be nonnegative: {coords}")
        return super().__new__(cls, coords)

    def __repr__(self):
        return "(" + ", ".join(map(str, self)) + ")"

    @property
    def length(self) -> int:
        return sum(self)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self) if c)

    @property
    def min_index(self) -> int | None:
        s = self.support
        return s[0] if s else None

    @property
    def max_index(self) -> int | None:
        s = self.support
        return s[-1] if s else None

    def _same_dim(self, other):
        if len(self) != len(other):
            raise DimensionMismatch(f"dimensions {len(self)} and {len(other)} differ")

    def plus(self, other) -> "Factorization":
        self._same_dim(other)
        return Factorization(u + v for u, v in zip(self, other))

    def gcd(self, other) -> "Factorization":
        self._same_dim(other)
        return Factorization(min(u, v) for u, v in zip(self, other))

    def distance(self, other) -> int:
        return distance(self, other)


class Trade(NamedTuple):
    """Two factorizations of the same element."""

    lhs: Factorization
    rhs: Factorization

    def reversed(self) -> "Trade":
        return Trade(self.rhs, self.lhs)

    def unordered(self) -> frozenset:
        return frozenset((self.lhs, self.rhs))


def unit(k: int, i: int, c: int = 1) -> Factorization:
    return Factorization(c if j == i else 0 for j in range(k))


def _gens(S) -> tuple[int, ...]:
    return tuple(getattr(S, "n", S))


def evaluate(S, x: Sequence[int]) -> int:
    """phi(x) = sum of x_i n_i."""
    gens = _gens(S)
    if len(x) != len(gens):
        raise DimensionMismatch(f"factorization has {len(x)} coordinates, semigroup has {len(gens)} generators")
    return check_int64(sum(int(c) * g for c, g in zip(x, gens)), "phi(x)")


def distance(x: Sequence[int], y: Sequence[int]) -> int:
    """d(x, y) = max(|x - gcd(x, y)|, |y - gcd(x, y)|)."""
    if len(x) != len(y):
        raise DimensionMismatch(f"dimensions {len(x)} and {len(y)} differ")
    dx = sum(max(u - v, 0) for u, v in zip(x, y))
    dy = sum(max(v - u, 0) for u, v in zip(x, y))
    return max(dx, dy)


def fiber_array(S, n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Factorizations of n as a lexicographically sorted (F, k) int64 array."""
    gens = np.array(_gens(S), dtype=np.int64)
    n = check_int64(int(n), "n")
    if n < 0:
        return np.empty((0, gens.shape[0]), dtype=np.int64)
    X, ok = kernels.factorizations(gens, n, int(budget))
    if not ok:
        raise WorkBudgetExceeded(n, budget)
    if X.shape[0] > 1:
        X = X[np.lexsort(X.T[::-1])]
    return X


def enumerate_factorizations(S, n: int, budget: int = DEFAULT_BUDGET) -> list[Factorization]:
    """All x with phi(x) = n, in lexicographic order (empty iff n is not in S)."""
    return [Factorization(r) for r in fiber_array(S, n, budget).tolist()]


def length_set(S, n: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    X = fiber_array(S, n, budget)
    if X.shape[0] == 0:
        raise NotInSemigroup(n, _gens(S))
    return sorted(set(X.sum(axis=1).tolist()))


def delta_of_element(S, n: int, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    L = length_set(S, n, budget)
    return frozenset(v - u for u, v in zip(L, L[1:]))


# --- basic swaps ---------------------------------------------------------------


def _check_index(S: CompoundSequence, i: int, low: int = 1):
    if not low <= i <= S.p:
        raise IndexOutOfRange(f"index {i} outside [{low}, {S.p}]")


def delta(S: CompoundSequence, i: int) -> Trade:
    """``delta_i = (a_i e_i, b_i e_{i-1})``."""
    _check_index(S, i)
    k = S.p + 1
    return Trade(unit(k, i, S.a[i - 1]), unit(k, i - 1, S.b[i - 1]))


def delta_prime(S: CompoundSequence, i: int) -> Trade:
    """``delta_i' = (b_i e_{i-1}, a_i e_i)``."""
    return delta(S, i).reversed()


def basic_swaps(S: CompoundSequence) -> list[Trade]:
    """The 2p basic swaps ``delta_1, delta_1', ..., delta_p, delta_p'``."""
    out = []
    for i in range(1, S.p + 1):
        out += [delta(S, i), delta_prime(S, i)]
    return out


def apply_swap(x: Sequence[int], t: Trade) -> Factorization:
    """``x + t.lhs - t.rhs``; raises NotApplicable if a coordinate would go negative."""
    if len(x) != len(t.lhs):
        raise DimensionMismatch(f"dimensions {len(x)} and {len(t.lhs)} differ")
    y = [u + p - q for u, p, q in zip(x, t.lhs, t.rhs)]
    if any(c < 0 for c in y):
        raise NotApplicable(f"{tuple(t.rhs)} does not fit inside {tuple(x)}")
    return Factorization(y)


def identify_swap(S: CompoundSequence, x: Sequence[int], y: Sequence[int]) -> tuple[int, bool] | None:
    """Return ``(i, primed)`` if y is obtained from x by one basic swap."""
    diff = [v - u for u, v in zip(x, y)]
    nz = [j for j, d in enumerate(diff) if d]
    if len(nz) != 2 or nz[1] != nz[0] + 1:
        return None
    i = nz[1]
    a, b = S.a[i - 1], S.b[i - 1]
    if diff[i - 1] == -b and diff[i] == a:
        return i, False
    if diff[i - 1] == b and diff[i] == -a:
        return i, True
    return None


# --- normal forms --------------------------------------------------------------


def any_factorization(S, n: int) -> Factorization:
    gens = np.array(_gens(S), dtype=np.int64)
    n = check_int64(int(n), "n")
    if n < 0:
        raise NotInSemigroup(n, _gens(S))
    x, found = kernels.first_factorization(gens, n)
    if not found:
        raise NotInSemigroup(n, _gens(S))
    return Factorization(x.tolist())


def normalize(S: CompoundSequence, x: Sequence[int], i: int) -> Factorization:
    """Turn any factorization into the i-normal one by exhaustive basic swaps.

    Order: delta_1, ..., delta_i, then delta_p', delta_{p-1}', ..., delta_{i+1}',
    each applied as often as it fits. Once a coordinate has been pushed below
    its box limit it is never increased again.
    """
    _check_index(S, i, low=0)
    x = list(x)
    for j in range(1, i + 1):
        k = x[j - 1] // S.b[j - 1]
        x[j - 1] -= k * S.b[j - 1]
        x[j] += k * S.a[j - 1]
    for j in range(S.p, i, -1):
        k = x[j] // S.a[j - 1]
        x[j] -= k * S.a[j - 1]
        x[j - 1] += k * S.b[j - 1]
    return Factorization(x)


def i_normal(S: CompoundSequence, n: int, i: int) -> Factorization:
    """The unique factorization of n with ``x_j < b_{j+1}`` for j < i and ``x_j < a_j`` for j > i."""
    _check_index(S, i, low=0)
    return normalize(S, any_factorization(S, n), i)


def is_i_normal(S: CompoundSequence, x: Sequence[int], i: int) -> bool:
    return all(x[j] < S.b[j] for j in range(i)) and all(x[j] < S.a[j - 1] for j in range(i + 1, S.p + 1))


def i_normal_direct(S: CompoundSequence, n: int, i: int) -> Factorization:
    """The i-normal factorization by modular arithmetic alone (no search, no swaps).

    Coordinates left of i are forced mod ``b_{j+1}``, those right of i mod
    ``a_j``; whatever is left must be a nonnegative multiple of ``n_i``.
    """
    _check_index(S, i, low=0)
    p, a, b, gens = S.p, S.a, S.b, S.n
    x = [0] * (p + 1)
    r = int(n)
    if r < 0:
        raise NotInSemigroup(n, gens)
    scale = 1  # b_1 ... b_j divides every generator from index j on
    for j in range(i):
        if r % scale:
            raise NotInSemigroup(n, gens)
        x[j] = (r // scale) * pow(gens[j] // scale, -1, b[j]) % b[j]
        r -= x[j] * gens[j]
        scale *= b[j]
    if r < 0 or r % scale:
        raise NotInSemigroup(n, gens)
    r //= scale
    for j in range(p, i, -1):
        rest = prod(a[j:])  # a_{j+1} ... a_p divides all of n_i .. n_j / scale
        if r % rest:
            raise NotInSemigroup(n, gens)
        coef = prod(b[i:j]) % a[j - 1]
        x[j] = (r // rest) * pow(coef, -1, a[j - 1]) % a[j - 1]
        r -= x[j] * (gens[j] // scale)
    base = gens[i] // scale
    if r < 0 or r % base:
        raise NotInSemigroup(n, gens)
    x[i] = r // base
    return Factorization(x)


def min_max_length(S: CompoundSequence, n: int) -> tuple[int, int]:
    """Lengths of the p-normal (shortest) and 0-normal (longest) factorizations."""
    x = any_factorization(S, n)
    return normalize(S, x, S.p).length, normalize(S, x, 0).length


def dichotomy_check(S: CompoundSequence, i: int, budget: int = DEFAULT_BUDGET):
    """Split the factorizations of ``a_i n_i`` into the two possible kinds.

    Returns ``(lower, upper)``: those with ``min(x) >= i`` and ``|x| <= a_i``,
    and those with ``max(x) <= i - 1`` and ``|x| >= b_i``. Every factorization
    lands on exactly one side.
    """
    _check_index(S, i)
    a, b = S.a[i - 1], S.b[i - 1]
    lower, upper = [], []
    for x in enumerate_factorizations(S, a * S.n[i], budget):
        if x.min_index >= i and x.length <= a:
            lower.append(x)
        elif x.max_index <= i - 1 and x.length >= b:
            upper.append(x)
    return lower, upper


# --- basic chains --------------------------------------------------------------


def basic_chain(S: CompoundSequence, x: Sequence[int], y: Sequence[int], mode: Mode = "left") -> list[Factorization]:
    """A left-first (or right-first) chain of basic swaps from x to y.

    Left-first: find the first coordinate t where the current ends differ; the
    two values are congruent mod ``b_{t+1}``, so ``delta_{t+1}`` fits on the
    larger side. Right-first works from the last differing coordinate with
    ``delta_t'``. The chain is grown from both ends until they meet.
    """
    x, y = Factorization(x), Factorization(y)
    if len(x) != S.p + 1 or len(y) != S.p + 1:
        raise DimensionMismatch(f"factorizations must have {S.p + 1} coordinates")
    if evaluate(S, x) != evaluate(S, y):
        raise NotSameElement(f"phi{tuple(x)} != phi{tuple(y)}")
    if mode not in ("left", "right"):
        raise InvalidInput(f"mode must be 'left' or 'right', got {mode!r}")
    u, v = list(x), list(y)
    head, tail = [x], [y]
    while u != v:
        diff = [j for j in range(len(u)) if u[j] != v[j]]
        if mode == "left":
            t = diff[0]
            big, side = (u, head) if u[t] > v[t] else (v, tail)
            c, d = S.b[t], S.a[t]
            big[t] -= c  # delta_{t+1}
            big[t + 1] += d
        else:
            t = diff[-1]
            big, side = (u, head) if u[t] > v[t] else (v, tail)
            c, d = S.a[t - 1], S.b[t - 1]
            big[t] -= c  # delta_t'
            big[t - 1] += d
        if big[t] < 0:
            raise AssertionError(f"congruence failed at coordinate {t}: {u} vs {v}")
        side.append(Factorization(big))
    return head + tail[::-1][1:]


def _unimodal(seq: list[int], rising_first: bool) -> bool:
    if not rising_first:
        seq = [-v for v in seq]
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    return all(seq[j] >= seq[j + 1] for j in range(k, len(seq) - 1))


def check_chain(S: CompoundSequence, chain: Sequence[Sequence[int]], x, y, mode: Mode = "left") -> list[str]:
    """Return every way in which ``chain`` fails to be a left/right-first basic chain from x to y."""
    problems = []
    chain = [tuple(c) for c in chain]
    if not chain or chain[0] != tuple(x) or chain[-1] != tuple(y):
        problems.append("endpoints do not match")
        return problems
    target = evaluate(S, x)
    both = Factorization(x).plus(y)
    lo, hi = both.min_index, both.max_index
    indices = []
    for s, (u, w) in enumerate(zip(chain, chain[1:])):
        if evaluate(S, w) != target:
            problems.append(f"step {s}: phi changes")
        sw = identify_swap(S, u, w)
        if sw is None:
            problems.append(f"step {s}: {u} -> {w} is not a basic swap")
            continue
        j, _ = sw
        changed = [c for c in range(len(u)) if u[c] != w[c]]
        rule = 1 + changed[0] if mode == "left" else changed[-1]
        if j != rule:
            problems.append(f"step {s}: swap index {j} breaks the {mode}-first rule")
        indices.append(j)
    for z in chain:
        zz = Factorization(z)
        if zz.length and (zz.min_index < lo or zz.max_index > hi):
            problems.append(f"{z} leaves the support window [{lo}, {hi}]")
    if not _unimodal(indices, rising_first=(mode == "left")):
        problems.append(f"swap indices {indices} are not resolved {mode} to right" if mode == "left"
                        else f"swap indices {indices} are not resolved right to left")
    return problems
