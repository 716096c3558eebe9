"""Closed-form invariants of a numerical semigroup on a compound sequence.

Nothing here enumerates factorizations; the oracle module provides the
brute-force values these are checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod
from typing import Optional

import numpy as np

from nscs.compound import CompoundSequence, check_int64
from nscs.errors import IndexOutOfRange, InvalidInput

CLOSED_FORM = "closed-form"
BOUND = "bound"
ORACLE = "oracle"


def apery_array(S: CompoundSequence, i: int) -> np.ndarray:
    """phi over the box ``u_j < b_{j+1}`` (j < i), ``u_i = 0``, ``u_j < a_j`` (j > i), sorted."""
    if not 0 <= i <= S.p:
        raise IndexOutOfRange(f"index {i} outside [0, {S.p}]")
    check_int64(apery_max(S, i), "max Apery element")
    values = np.zeros(1, dtype=np.int64)
    for j, g in enumerate(S.n):
        if j == i:
            continue
        size = S.b[j] if j < i else S.a[j - 1]
        values = (values[:, None] + g * np.arange(size, dtype=np.int64)).ravel()
    return np.sort(values)


def apery(S: CompoundSequence, i: int) -> frozenset[int]:
    return frozenset(apery_array(S, i).tolist())


def apery_max(S: CompoundSequence, i: int) -> int:
    return sum(g * ((S.b[j] if j < i else S.a[j - 1]) - 1) for j, g in enumerate(S.n) if j != i)


def frobenius(S: CompoundSequence) -> int:
    """``-n_0 + sum_{j>=1} n_j (a_j - 1)``; -1 for the degenerate S = N_0."""
    return check_int64(-S.n[0] + sum(S.n[j] * (S.a[j - 1] - 1) for j in range(1, S.p + 1)), "Frobenius number")


def genus(S: CompoundSequence) -> int:
    twice = 1 + frobenius(S)
    if twice % 2:
        raise ArithmeticError(f"1 + g(S) = {twice} is odd")  # impossible for a symmetric semigroup
    return twice // 2


def betti_elements(S: CompoundSequence) -> frozenset[int]:
    """``{a_i n_i : i = 1..p}``."""
    return frozenset(check_int64(S.a[i - 1] * S.n[i], "Betti element") for i in range(1, S.p + 1))


def _need_pairs(S):
    if S.p < 1:
        raise InvalidInput("needs at least one (a, b) pair")


def catenary_degree(S: CompoundSequence) -> int:
    _need_pairs(S)
    return max(S.b)


@dataclass(frozen=True)
class DeltaData:
    """What the pairs alone say about the delta set.

    ``N = {b_i - a_i}``; ``min_delta = gcd(N)`` and ``max_delta = max(N)`` always
    hold, and ``exact`` is filled in when N is an arithmetic run that pins the
    whole set down (``case`` 1-3), otherwise ``determined`` is False.
    """

    N: frozenset[int]
    min_delta: int
    max_delta: int
    exact: Optional[frozenset[int]] = None
    case: Optional[int] = None

    @property
    def determined(self) -> bool:
        return self.exact is not None


def delta_data(S: CompoundSequence) -> DeltaData:
    _need_pairs(S)
    N = frozenset(b - a for a, b in S.pairs)
    lo, hi = reduce(gcd, N), max(N)
    exact = case = None
    ordered = sorted(N)
    if len(N) == 1:
        exact, case = N, 1
    elif ordered == [ordered[0] * k for k in range(1, len(N) + 1)]:
        exact, case = N, 2
    elif ordered[0] % 2 == 0:
        alpha = ordered[0] // 2
        if ordered == [alpha * k for k in range(2, len(N) + 2)]:
            exact, case = N | {alpha}, 3
    return DeltaData(N=N, min_delta=lo, max_delta=hi, exact=exact, case=case)


def _ceil_div(x, y):
    return -(-x // y)


@dataclass(frozen=True)
class TameBoundData:
    """Lower bound for the tame degree from two witness elements.

    ``r`` feeds the bound at ``a_p r_p n_p`` (element ``witness_r``), ``s`` the
    bound at ``b_1 s_1 n_0`` (element ``witness_s``).
    """

    r: tuple[int, ...]
    s: tuple[int, ...]
    bound_r: int
    bound_s: int
    witness_r: int
    witness_s: int

    @property
    def bound(self) -> int:
        return max(self.bound_r, self.bound_s)


def tame_lower_bound(S: CompoundSequence) -> TameBoundData:
    _need_pairs(S)
    p, a, b = S.p, S.a, S.b
    r = [1]
    for i in range(2, p + 1):
        r.append(_ceil_div(a[i - 2] * r[-1], b[i - 1]))
    s = [1]
    for i in range(p, 1, -1):
        s.insert(0, _ceil_div(b[i - 1] * s[0], a[i - 2]))
    bound_r = sum((b[j] - a[j]) * r[j] for j in range(p - 1)) + b[p - 1] * r[p - 1]
    bound_s = b[0] * s[0]
    return TameBoundData(
        r=tuple(r),
        s=tuple(s),
        bound_r=check_int64(bound_r, "tame bound"),
        bound_s=check_int64(bound_s, "tame bound"),
        witness_r=check_int64(a[p - 1] * r[p - 1] * S.n[p], "tame witness"),
        witness_s=check_int64(b[0] * s[0] * S.n[0], "tame witness"),
    )


@dataclass
class InvariantReport:
    frobenius: int
    genus: int
    betti: frozenset[int]
    catenary: Optional[int]
    delta: Optional[DeltaData]
    tame_bound: Optional[TameBoundData]
    apery_sizes: list[int]
    provenance: dict[str, str] = field(default_factory=dict)


def analyze(S: CompoundSequence) -> InvariantReport:
    """Every closed form at once. For p = 0 the pair-based fields are None."""
    has_pairs = S.p >= 1
    report = InvariantReport(
        frobenius=frobenius(S),
        genus=genus(S),
        betti=betti_elements(S),
        catenary=catenary_degree(S) if has_pairs else None,
        delta=delta_data(S) if has_pairs else None,
        tame_bound=tame_lower_bound(S) if has_pairs else None,
        apery_sizes=[prod(S.b[:i]) * prod(S.a[i:]) for i in range(S.p + 1)],
    )
    report.provenance = {
        "frobenius": CLOSED_FORM,
        "genus": CLOSED_FORM,
        "betti": CLOSED_FORM,
        "catenary": CLOSED_FORM,
        "apery_sizes": CLOSED_FORM,
        "delta.N": CLOSED_FORM,
        "delta.min": CLOSED_FORM,
        "delta.max": CLOSED_FORM,
        "delta.exact": CLOSED_FORM,
        "tame_bound": BOUND,
    }
    return report
