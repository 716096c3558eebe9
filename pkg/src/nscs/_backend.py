"""Kernel backend selection.

``NSCS_BACKEND=numba`` (default) runs the compiled kernels; ``NSCS_BACKEND=numpy``
never imports numba and uses the vectorized fallbacks instead. If numba is
requested but cannot be imported, the numpy path is used with a warning.
"""
import logging
import os

logger = logging.getLogger(__name__)

_requested = os.environ.get("NSCS_BACKEND", "numba").strip().lower() or "numba"
if _requested not in ("numba", "numpy"):
    raise ImportError(f"NSCS_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

BACKEND = _requested
if BACKEND == "numba":
    try:
        import numba  # noqa: F401
    except ImportError:  # pragma: no cover - numba ships with the dev environment
        logger.warning("numba unavailable, falling back to numpy kernels")
        BACKEND = "numpy"

#: Largest value the int64 kernels can hold.
INT64_MAX = 2**63 - 1
