import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nscs import factorization as fz
from nscs.compound import from_pairs
from nscs.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidInput,
    NotApplicable,
    NotInSemigroup,
    NotSameElement,
    WorkBudgetExceeded,
)
from nscs.sampling import random_compound

from reference import dist, ref_factorizations

S0 = from_pairs([(2, 7), (2, 9)])  # <4, 14, 63>


def test_factorization_value_type():
    x = fz.Factorization((7, 0, 2))
    assert x.length == 9 and tuple(x.support) == (0, 2)
    assert x.min_index == 0 and x.max_index == 2
    assert x.plus((1, 1, 1)) == (8, 1, 3)
    assert x.gcd((3, 4, 2)) == (3, 0, 2)
    assert x.distance((0, 2, 1)) == 8
    assert repr(x) == "(7, 0, 2)"
    with pytest.raises(InvalidInput):
        fz.Factorization((1, -1))


def test_distance_definition():
    assert fz.distance((28, 1, 0), (0, 0, 2)) == 29
    assert fz.distance((0, 2, 0), (7, 0, 0)) == 7
    assert fz.distance((1, 2, 3), (1, 2, 3)) == 0


def test_fiber_126():
    X = fz.enumerate_factorizations(S0, 126)
    assert X == ref_factorizations(S0.n, 126)
    assert X == [(0, 0, 2), (0, 9, 0), (7, 7, 0), (14, 5, 0), (21, 3, 0), (28, 1, 0)]
    assert fz.length_set(S0, 126) == [2, 9, 14, 19, 24, 29]
    assert fz.delta_of_element(S0, 126) == {5, 7}


def test_fiber_edges():
    assert fz.enumerate_factorizations(S0, 0) == [(0, 0, 0)]
    assert fz.enumerate_factorizations(S0, 5) == []
    with pytest.raises(NotInSemigroup):
        fz.length_set(S0, 5)
    with pytest.raises(WorkBudgetExceeded):
        fz.enumerate_factorizations(S0, 5000, budget=10)


def test_basic_swaps():
    t = fz.delta(S0, 1)
    assert fz.evaluate(S0, t.lhs) == fz.evaluate(S0, t.rhs) == 28
    assert t.lhs == (0, 2, 0) and t.rhs == (7, 0, 0)
    assert fz.delta_prime(S0, 2) == t.__class__((0, 9, 0), (0, 0, 2))
    assert len(fz.basic_swaps(S0)) == 4
    with pytest.raises(IndexOutOfRange):
        fz.delta(S0, 0)
    with pytest.raises(IndexOutOfRange):
        fz.delta(S0, 3)


def test_apply_and_identify_swap():
    t = fz.delta(S0, 1)
    y = fz.apply_swap((7, 1, 0), t)
    assert y == (0, 3, 0)
    with pytest.raises(NotApplicable):
        fz.apply_swap((6, 1, 0), t)
    assert fz.identify_swap(S0, (7, 1, 0), (0, 3, 0)) == (1, False)
    assert fz.identify_swap(S0, (0, 3, 0), (7, 1, 0)) == (1, True)
    assert fz.identify_swap(S0, (7, 1, 0), (7, 1, 0)) is None
    assert fz.identify_swap(S0, (28, 1, 0), (0, 0, 2)) is None


@pytest.mark.parametrize(
    "n, expected",
    [(28, [(7, 0, 0), (0, 2, 0), (0, 2, 0)]), (126, [(28, 1, 0), (0, 9, 0), (0, 0, 2)])],
)
def test_i_normal_forms(n, expected):
    for i, want in enumerate(expected):
        assert fz.i_normal(S0, n, i) == want
        assert fz.i_normal_direct(S0, n, i) == want
        assert fz.is_i_normal(S0, want, i)
    with pytest.raises(NotInSemigroup):
        fz.i_normal(S0, 5, 0)
    with pytest.raises(IndexOutOfRange):
        fz.i_normal(S0, 28, 3)


def test_min_max_length():
    assert fz.min_max_length(S0, 126) == (2, 29)


def _ref_normal(S, n, i):
    ok = [
        x for x in ref_factorizations(S.n, n)
        if all(x[j] < S.b[j] for j in range(i)) and all(x[j] < S.a[j - 1] for j in range(i + 1, S.p + 1))
    ]
    assert len(ok) == 1
    return ok[0]


@st.composite
def small_compounds(draw):
    return random_compound(random.Random(draw(st.integers(0, 10**9))), max_gen=400)


@settings(max_examples=40, deadline=None)
@given(small_compounds(), st.integers(0, 1500))
def test_normal_forms_against_reference(S, n):
    if not ref_factorizations(S.n, n):
        return
    for i in range(S.p + 1):
        want = _ref_normal(S, n, i)
        assert fz.i_normal(S, n, i) == want
        assert fz.i_normal_direct(S, n, i) == want


@settings(max_examples=40, deadline=None)
@given(small_compounds())
def test_swap_length_arithmetic(S):
    for i in range(1, S.p + 1):
        t = fz.delta(S, i)
        assert t.lhs == fz.unit(S.p + 1, i, S.a[i - 1])
        assert t.rhs == fz.unit(S.p + 1, i - 1, S.b[i - 1])
        assert t.rhs.length - t.lhs.length == S.b[i - 1] - S.a[i - 1]
        assert dist(t.lhs, t.rhs) == S.b[i - 1]


def test_chain_example():
    chain = fz.basic_chain(S0, (28, 1, 0), (0, 0, 2), "left")
    assert chain == [(28, 1, 0), (21, 3, 0), (14, 5, 0), (7, 7, 0), (0, 9, 0), (0, 0, 2)]
    assert fz.check_chain(S0, chain, (28, 1, 0), (0, 0, 2), "left") == []
    right = fz.basic_chain(S0, (28, 1, 0), (0, 0, 2), "right")
    assert fz.check_chain(S0, right, (28, 1, 0), (0, 0, 2), "right") == []


def test_chain_errors():
    with pytest.raises(NotSameElement):
        fz.basic_chain(S0, (7, 0, 0), (0, 9, 0))
    with pytest.raises(DimensionMismatch):
        fz.basic_chain(S0, (7, 0), (0, 2))
    with pytest.raises(InvalidInput):
        fz.basic_chain(S0, (7, 0, 0), (0, 2, 0), "middle")


def test_check_chain_catches_bad_chains():
    x, y = (28, 1, 0), (0, 0, 2)
    assert fz.check_chain(S0, [x, y], x, y) != []  # not a basic swap
    assert fz.check_chain(S0, [x], x, y) != []
    assert fz.check_chain(S0, [x, x], x, x) != []  # repeated entry is no swap


def _walk(S, n, pattern):
    # a path of basic swaps in the fiber of n whose swap indices follow pattern
    X = fz.enumerate_factorizations(S, n)

    def extend(path):
        if len(path) == len(pattern) + 1:
            return path
        for z in X:
            sw = fz.identify_swap(S, path[-1], z)
            if z not in path and sw and sw[0] == pattern[len(path) - 1]:
                found = extend(path + [z])
                if found:
                    return found
        return None

    for x in X:
        found = extend([x])
        if found:
            return found
    raise AssertionError("no such walk")


def test_check_chain_rejects_non_monotone_resolution():
    walk = _walk(S0, 154, [2, 1, 2])
    x, y = walk[0], walk[-1]
    assert any("not resolved" in pr for pr in fz.check_chain(S0, walk, x, y, "left"))
    walk = _walk(S0, 154, [1, 2, 1])
    x, y = walk[0], walk[-1]
    assert any("not resolved" in pr for pr in fz.check_chain(S0, walk, x, y, "right"))


@settings(max_examples=30, deadline=None)
@given(small_compounds(), st.integers(0, 3000), st.integers(0, 10**6))
def test_chains_validate(S, n, seed):
    X = ref_factorizations(S.n, n)
    if len(X) < 2:
        return
    rng = random.Random(seed)
    x, y = rng.sample(X, 2)
    for mode in ("left", "right"):
        chain = fz.basic_chain(S, x, y, mode)
        assert fz.check_chain(S, chain, x, y, mode) == []
        assert all(fz.evaluate(S, z) == n for z in chain)


@settings(max_examples=30, deadline=None)
@given(small_compounds())
def test_dichotomy(S):
    for i in range(1, S.p + 1):
        lower, upper = fz.dichotomy_check(S, i)
        assert len(lower) + len(upper) == len(ref_factorizations(S.n, S.a[i - 1] * S.n[i]))


@settings(max_examples=30, deadline=None)
@given(small_compounds())
def test_basic_swaps_are_irreducible(S):
    # the only factorizations of a_i n_i with a coordinate at index >= i are
    # those of the lower kind, and the canonical one is among them
    for i in range(1, S.p + 1):
        lower, upper = fz.dichotomy_check(S, i)
        assert fz.unit(S.p + 1, i, S.a[i - 1]) in lower
        assert fz.unit(S.p + 1, i - 1, S.b[i - 1]) in upper
        for x in lower:
            for y in upper:
                assert set(x.support).isdisjoint(y.support)
