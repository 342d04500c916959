"""Kernel backend selection.

The compiled extension is used when importable; setting the environment
variable ``PACKED_SEMIGROUPS_PURE=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PACKED_SEMIGROUPS_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

sieve = _impl.sieve
is_member = _impl.is_member
apery_sieve = _impl.apery_sieve
apery_from_vectors = _impl.apery_from_vectors


def closure_vectors(m, residues):
    try:
        return _impl.closure_vectors(m, residues)
    except OverflowError:
        return _kernels_py.closure_vectors(m, residues)


def backends() -> dict[str, object]:
    """Every importable backend module keyed by name (used by tests and benchmarks)."""
    found: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels

        found["cython"] = _kernels
    except ImportError:
        pass
    return found
