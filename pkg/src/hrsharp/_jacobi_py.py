"""Cyclic Jacobi eigenvalue iteration, numpy implementation.

This is the fallback backend used when the compiled extension is not
available.  Row/column rotations are applied with array slices, so the
per-rotation cost is O(n) numpy work instead of an O(n) Python loop.
"""

from __future__ import annotations

import math

import numpy as np


def _offdiag_norm(a: np.ndarray) -> float:
    n = a.shape[0]
    sq = float((a * a).sum()) - float((np.diagonal(a) ** 2).sum())
    # roundoff can push the difference slightly negative
    return math.sqrt(max(sq, 0.0))


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``tol`` times the Frobenius norm of the input, or after
    ``max_sweeps`` cyclic sweeps.
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if n == 1:
        return a[0, :1].copy()

    norm = math.sqrt(float((a * a).sum()))
    if norm == 0.0:
        return np.zeros(n)
    thresh = tol * norm

    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= thresh:
            break
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0

    return np.sort(np.diagonal(a).copy())
