import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nscs import invariants as inv
from nscs.compound import from_pairs
from nscs.errors import IndexOutOfRange, InvalidInput, Overflow
from nscs.sampling import random_compound

from reference import ref_apery, ref_frobenius, ref_genus

S49 = from_pairs([(7, 17), (7, 22)])
S4 = from_pairs([(2, 7), (2, 9)])
S165 = from_pairs([(15, 16), (11, 13)])


def test_frobenius_and_genus_examples():
    # frozen from the reference enumerator
    assert inv.frobenius(S49) == ref_frobenius(S49.n) == 2909
    assert inv.genus(S49) == ref_genus(S49.n) == 1455
    assert inv.frobenius(S4) == 73 and inv.genus(S4) == 37
    assert inv.frobenius(from_pairs([(2, 3)])) == 1
    assert inv.frobenius(from_pairs([])) == -1 and inv.genus(from_pairs([])) == 0


def test_apery_example():
    assert inv.apery(S4, 0) == ref_apery(S4.n, 4) == {0, 14, 63, 77}
    for i, ni in enumerate(S4.n):
        box = inv.apery(S4, i)
        assert len(box) == ni
        assert max(box) == inv.apery_max(S4, i) == inv.frobenius(S4) + ni
    with pytest.raises(IndexOutOfRange):
        inv.apery(S4, 3)


def test_betti_and_catenary():
    assert inv.betti_elements(S49) == {833, 2618}
    assert inv.betti_elements(S4) == {28, 126}
    assert inv.catenary_degree(S49) == 22
    assert inv.catenary_degree(S165) == 16
    # the largest Betti element need not be a_p n_p
    S = from_pairs([(9, 11), (2, 3)])
    assert S.n == (18, 22, 33)
    assert inv.betti_elements(S) == {198, 66}
    with pytest.raises(InvalidInput):
        inv.catenary_degree(from_pairs([]))


@pytest.mark.parametrize(
    "pairs, N, lo, hi, exact, case",
    [
        ([(7, 17), (7, 22)], {10, 15}, 5, 15, {5, 10, 15}, 3),
        ([(2, 7), (2, 9)], {5, 7}, 1, 7, None, None),
        ([(15, 16), (11, 13)], {1, 2}, 1, 2, {1, 2}, 2),
        ([(2, 5), (2, 5)], {3}, 3, 3, {3}, 1),
        ([(3, 7), (5, 13)], {4, 8}, 4, 8, {4, 8}, 2),
        ([(3, 7), (5, 11)], {4, 6}, 2, 6, {2, 4, 6}, 3),
    ],
)
def test_delta_data(pairs, N, lo, hi, exact, case):
    d = inv.delta_data(from_pairs(pairs))
    assert d.N == N and d.min_delta == lo and d.max_delta == hi
    assert d.exact == (frozenset(exact) if exact else None)
    assert d.case == case and d.determined == (exact is not None)


def test_tame_bounds():
    t = inv.tame_lower_bound(S49)
    assert (t.r, t.s, t.bound_r, t.bound_s, t.bound) == ((1, 1), (4, 1), 32, 68, 68)
    assert (t.witness_r, t.witness_s) == (2618, 3332)
    t = inv.tame_lower_bound(S165)
    assert (t.bound_r, t.bound_s, t.bound) == (27, 16, 27)
    assert inv.tame_lower_bound(from_pairs([(2, 3)])).bound == 3


def test_tame_bound_second_example():
    # <165, 195, 208> = pairs (11, 13), (15, 16)
    S = from_pairs([(11, 13), (15, 16)])
    assert S.n == (165, 195, 208)
    assert inv.tame_lower_bound(S).bound == 26


def test_analyze_report():
    rep = inv.analyze(S49)
    assert rep.frobenius == 2909 and rep.catenary == 22
    assert rep.apery_sizes == list(S49.n)
    assert rep.delta.exact == {5, 10, 15}
    assert set(rep.provenance.values()) <= {inv.CLOSED_FORM, inv.BOUND}
    empty = inv.analyze(from_pairs([]))
    assert empty.catenary is None and empty.delta is None and empty.tame_bound is None


def test_overflow_is_reported():
    with pytest.raises(Overflow):
        from_pairs([(2, 3)] + [(10**10, 10**10 + 1)] * 2)
    S = from_pairs([(7, 2**61 + 1)])  # generators fit, the Apery box does not
    with pytest.raises(Overflow):
        inv.apery_array(S, 1)
    with pytest.raises(Overflow):
        inv.frobenius(S)


@st.composite
def compounds(draw):
    return random_compound(random.Random(draw(st.integers(0, 10**9))), max_gen=2000)


@settings(max_examples=40, deadline=None)
@given(compounds())
def test_closed_forms_match_reference(S):
    g = ref_frobenius(S.n)
    assert inv.frobenius(S) == g
    assert inv.genus(S) == ref_genus(S.n)
    assert inv.apery(S, 0) == ref_apery(S.n, S.n[0])
