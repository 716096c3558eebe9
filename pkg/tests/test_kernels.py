"""Both kernel backends must return identical arrays."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nscs.kernels import _numpy as npk

nb = pytest.importorskip("nscs.kernels._numba")


def _same(x, y):
    if isinstance(x, tuple):
        return len(x) == len(y) and all(_same(u, v) for u, v in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


gen_sets = st.lists(st.integers(2, 40), min_size=1, max_size=4, unique=True).map(
    lambda v: np.array(sorted(v), dtype=np.int64)
)


@settings(max_examples=30, deadline=None)
@given(gen_sets, st.integers(0, 400))
def test_membership_and_fibers(gens, n):
    assert _same(nb.membership_table(gens, 500), npk.membership_table(gens, 500))
    assert _same(nb.factorizations(gens, n, 10**5), npk.factorizations(gens, n, 10**5))
    assert _same(nb.first_factorization(gens, n), npk.first_factorization(gens, n))


@settings(max_examples=20, deadline=None)
@given(gen_sets, st.integers(50, 250))
def test_scans(gens, bound):
    for name in ("scan_catenary", "scan_tame", "scan_components", "scan_delta"):
        assert _same(getattr(nb, name)(gens, bound, 10**5), getattr(npk, name)(gens, bound, 10**5)), name
    assert _same(nb.fibers_csr(gens, 10, bound, 10**5), npk.fibers_csr(gens, 10, bound, 10**5))


def test_fiber_invariants_and_budget():
    gens = np.array([4, 14, 63], dtype=np.int64)
    X, ok = nb.factorizations(gens, 126, 100)
    for name in ("catenary_of_fiber", "tame_of_fiber", "support_components", "length_gaps"):
        assert _same(getattr(nb, name)(X), getattr(npk, name)(X)), name
    assert nb.factorizations(gens, 5000, 3)[1] == npk.factorizations(gens, 5000, 3)[1] == False  # noqa: E712
    assert _same(nb.scan_catenary(gens, 300, 3)[1], npk.scan_catenary(gens, 300, 3)[1])


def test_modulus_violations_parity():
    gens = np.array([4, 14, 63], dtype=np.int64)
    ns, off, rows, _ = nb.fibers_csr(gens, 0, 300, 10**5)
    a = np.array([2, 2], dtype=np.int64)
    b = np.array([7, 9], dtype=np.int64)
    assert nb.modulus_violations(rows, off, a, b)[0] == npk.modulus_violations(rows, off, a, b)[0] == 0
    bad_b = np.array([5, 9], dtype=np.int64)
    assert nb.modulus_violations(rows, off, a, bad_b)[0] == npk.modulus_violations(rows, off, a, bad_b)[0] > 0


def test_backend_flag(monkeypatch):
    import importlib

    import nscs._backend as backend

    monkeypatch.setenv("NSCS_BACKEND", "fortran")
    with pytest.raises(ImportError):
        importlib.reload(backend)
    monkeypatch.setenv("NSCS_BACKEND", "numpy")
    assert importlib.reload(backend).BACKEND == "numpy"
    monkeypatch.delenv("NSCS_BACKEND")
    importlib.reload(backend)
