"""Hot numeric kernels, dispatched to numba or numpy per ``NSCS_BACKEND``.

Both implementations stay importable as ``numpy_impl`` and (when numba is
installed) ``numba_impl`` so they can be compared side by side.
"""
from nscs._backend import BACKEND
from nscs.kernels import _numpy as numpy_impl

if BACKEND == "numba":
    from nscs.kernels import _numba as numba_impl

    impl = numba_impl
else:
    numba_impl = None
    impl = numpy_impl

prefix_gcds = impl.prefix_gcds
membership_table = impl.membership_table
factorizations = impl.factorizations
first_factorization = impl.first_factorization
catenary_of_fiber = impl.catenary_of_fiber
tame_of_fiber = impl.tame_of_fiber
support_components = impl.support_components
length_gaps = impl.length_gaps
scan_catenary = impl.scan_catenary
scan_tame = impl.scan_tame
scan_components = impl.scan_components
scan_delta = impl.scan_delta
fibers_csr = impl.fibers_csr
modulus_violations = impl.modulus_violations

__all__ = [
    "BACKEND", "impl", "numpy_impl", "numba_impl",
    "prefix_gcds", "membership_table", "factorizations", "first_factorization",
    "catenary_of_fiber", "tame_of_fiber", "support_components", "length_gaps",
    "scan_catenary", "scan_tame", "scan_components", "scan_delta",
    "fibers_csr", "modulus_violations",
]
