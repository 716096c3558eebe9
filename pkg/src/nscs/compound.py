"""Compound sequences: construction, validation and detection.

A compound sequence is built from pairs ``(a_i, b_i)``, i = 1..p, with
``2 <= a_i < b_i`` and ``gcd(a_i, b_j) = 1`` whenever ``i >= j``; its terms are

    n_i = b_1 * ... * b_i * a_{i+1} * ... * a_p,    i = 0..p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod
from typing import Iterable, Sequence

from nscs._backend import INT64_MAX
from nscs.errors import (
    CoprimalityViolation,
    EmptyInput,
    GcdNotOne,
    InvalidInput,
    NotCompound,
    NotSorted,
    Overflow,
    PairOutOfRange,
)


def check_int64(value: int, what: str = "value") -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise Overflow(f"{what} = {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True)
class GeneratorList:
    """Strictly increasing positive integers with gcd 1."""

    gens: tuple[int, ...]

    def __init__(self, gens: Iterable[int]):
        gens = tuple(int(g) for g in gens)
        if not gens:
            raise EmptyInput("generator list is empty")
        if any(g <= 0 for g in gens):
            raise InvalidInput(f"generators must be positive: {list(gens)}")
        if any(x >= y for x, y in zip(gens, gens[1:])):
            raise NotSorted(f"generators must be strictly increasing: {list(gens)}")
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(f"gcd of {list(gens)} is {reduce(gcd, gens)}")
        for g in gens:
            check_int64(g, "generator")
        object.__setattr__(self, "gens", gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


@dataclass(frozen=True)
class CompoundSequence:
    """Validated pairs plus the derived generators ``n``.

    Build with :func:`from_pairs` or :func:`detect`; direct construction also
    validates.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    n: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        b = tuple(int(v) for v in self.b)
        if len(a) != len(b):
            raise InvalidInput("a and b must have the same length")
        for i, (ai, bi) in enumerate(zip(a, b), start=1):
            if not 2 <= ai < bi:
                raise PairOutOfRange(i, ai, bi)
        for i in range(1, len(a) + 1):
            for j in range(1, i + 1):
                g = gcd(a[i - 1], b[j - 1])
                if g > 1:
                    raise CoprimalityViolation(i, j, g)
        p = len(a)
        n = tuple(
            check_int64(prod(b[:i]) * prod(a[i:]), f"n_{i}") for i in range(p + 1)
        )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.a, self.b))

    @property
    def gens(self) -> GeneratorList:
        return GeneratorList(self.n)

    def __str__(self):
        return "<" + ", ".join(map(str, self.n)) + ">"


def from_pairs(pairs: Sequence[tuple[int, int]]) -> CompoundSequence:
    """Build a compound sequence from ``[(a_1, b_1), ..., (a_p, b_p)]``.

    An empty list gives the degenerate sequence ``(1,)``, i.e. the whole of N_0.

    >>> from_pairs([(7, 17), (7, 22)]).n
    (49, 119, 374)
    """
    pairs = [tuple(pr) for pr in pairs]
    if any(len(pr) != 2 for pr in pairs):
        raise InvalidInput("each pair must have exactly two entries")
    return CompoundSequence(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def _in_semigroup(n: int, gens: Sequence[int]) -> bool:
    from nscs import oracle

    if not gens:
        return n == 0
    return oracle.membership(oracle.GenericSemigroup(gens, check_gcd=False), n)


def is_minimally_generated(gens: GeneratorList | Sequence[int]) -> bool:
    """True iff no generator is a nonnegative combination of the others."""
    gens = tuple(gens)
    for i, g in enumerate(gens):
        # larger generators can never contribute to a smaller one
        others = [h for j, h in enumerate(gens) if j != i and h < g]
        if _in_semigroup(g, others):
            return False
    return True


def criterion_holds(gens: Sequence[int]) -> bool:
    """``n_1 ... n_{p-1} == gcd(n_0, n_1) ... gcd(n_{p-1}, n_p)``."""
    gens = tuple(gens)
    return prod(gens[1:-1]) == prod(gcd(x, y) for x, y in zip(gens, gens[1:]))


def recover_pairs(gens: Sequence[int]) -> list[tuple[int, int]]:
    """``a_i = n_{i-1} / gcd(n_{i-1}, n_i)``, ``b_i = n_i / gcd(n_{i-1}, n_i)``."""
    out = []
    for x, y in zip(gens, gens[1:]):
        g = gcd(x, y)
        out.append((x // g, y // g))
    return out


def detect(gens: GeneratorList | Sequence[int]) -> CompoundSequence:
    """Recognise a minimally generated numerical semigroup on a compound sequence.

    Raises :class:`NotCompound` with ``reason`` ``NotMinimal`` or
    ``CriterionFails``; malformed input (empty, unsorted, gcd > 1) raises
    before any criterion is evaluated.
    """
    if not isinstance(gens, GeneratorList):
        gens = GeneratorList(gens)
    n = gens.gens
    if not is_minimally_generated(n):
        raise NotCompound(NotCompound.NOT_MINIMAL, f"{list(n)} is not a minimal generating set")
    if len(n) == 1:
        return from_pairs([])
    if not criterion_holds(n):
        raise NotCompound(
            NotCompound.CRITERION_FAILS,
            f"{prod(n[1:-1])} != product of consecutive gcds "
            f"{prod(gcd(x, y) for x, y in zip(n, n[1:]))}",
        )
    try:
        seq = from_pairs(recover_pairs(n))
    except InvalidInput as exc:  # cannot happen for minimal input satisfying the criterion
        raise NotCompound(NotCompound.CRITERION_FAILS, str(exc)) from exc
    if seq.n != n:  # cannot happen for minimal input satisfying the criterion
        raise NotCompound(NotCompound.CRITERION_FAILS, "recovered pairs do not regenerate the input")
    return seq


def is_compound(gens: Sequence[int]) -> bool:
    try:
        detect(gens)
    except NotCompound:
        return False
    return True
