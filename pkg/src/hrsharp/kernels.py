"""Backend selection for the compiled kernels.

The Cython extension is preferred when it imported cleanly; otherwise the
numpy implementation takes over.  Setting the environment variable
``HRSHARP_PURE=1`` forces the numpy backend (useful for benchmarking and
for debugging the extension).
"""

from __future__ import annotations

import os

import numpy as np

from . import _jacobi_py
from .errors import ArgumentError

if os.environ.get("HRSHARP_PURE") == "1":
    _impl = _jacobi_py
    _BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        _BACKEND = "compiled"
    except ImportError:
        _impl = _jacobi_py
        _BACKEND = "python"


def backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return _BACKEND


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix via cyclic Jacobi sweeps.

    The iteration stops when the off-diagonal Frobenius norm drops below
    ``tol`` times the Frobenius norm of the input (default 1e-12), with a
    hard cap of ``max_sweeps`` sweeps.  Returns eigenvalues sorted
    ascending.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError("jacobi_eigenvalues expects a square matrix")
    if a.shape[0] == 0:
        raise ArgumentError("jacobi_eigenvalues expects a non-empty matrix")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * (1.0 + float(np.abs(a).max()))):
        raise ArgumentError("jacobi_eigenvalues expects a symmetric matrix")
    return _impl.jacobi_eigenvalues(a, tol, max_sweeps)
