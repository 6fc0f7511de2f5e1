"""Angular operator spectra.

Every inequality constant in this package is a minimum of a scalar
function over the eigenvalues of a non-negative angular operator on the
sphere.  This module provides ordered enumerations of those eigenvalues
for the operator families we support:

* Laplace-Beltrami on the (d-1)-sphere: ``k (k + d - 2)``,
* constant electric shifts of any base spectrum,
* Aharonov-Bohm magnetic operators in any dimension d >= 2,
* the magnetic monopole angular operator in d = 3,
* a numerically diagonalized Schroedinger operator on the circle for
  angular electric potentials in d = 2.

Spectra are immutable once constructed and enumerate eigenvalues in
non-decreasing order; requesting ``n`` and later ``n + k`` values always
yields prefix-consistent lists.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ArgumentError, ResolutionError
from .kernels import jacobi_eigenvalues

#: Numerically computed eigenvalues may undershoot zero by roundoff;
#: anything below this is rejected as a solver failure.
NEGATIVE_TOL = 1e-12


@dataclass(frozen=True)
class ModeExclusion:
    """Finite set of enumeration indices to drop from a spectrum."""

    indices: frozenset[int]

    def __post_init__(self):
        for i in self.indices:
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise ArgumentError(f"excluded index must be a non-negative integer, got {i!r}")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "ModeExclusion":
        return cls(frozenset(int(i) for i in indices))


@dataclass(frozen=True, eq=False)
class AngularSpectrum:
    """Ordered enumeration of eigenvalues of a non-negative angular operator.

    ``take(n)`` returns the first ``n`` eigenvalues (non-decreasing).  For
    discretized operators only a limited prefix is trustworthy; asking
    beyond ``limit`` raises :class:`ResolutionError`.  ``finite`` marks
    spectra whose limited prefix is the entire spectrum (explicit value
    lists), as opposed to a window into an infinite one.
    """

    provenance: str
    exhaustive: bool = True
    limit: int | None = None
    finite: bool = False
    _source: Callable[[int], Sequence[float]] = None  # type: ignore[assignment]
    _cache: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def take(self, count: int) -> tuple[float, ...]:
        """First ``count`` eigenvalues in non-decreasing order."""
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise ArgumentError(f"count must be a positive integer, got {count!r}")
        if self.limit is not None and count > self.limit:
            if self.finite:
                raise ArgumentError(
                    f"spectrum '{self.provenance}' holds only {self.limit} eigenvalues"
                )
            raise ResolutionError(
                f"spectrum '{self.provenance}' is resolved up to {self.limit} modes; "
                f"{count} were requested (increase the discretization)"
            )
        with self._lock:
            if count > len(self._cache):
                values = list(self._source(count))
                if len(values) < count:
                    raise ResolutionError(
                        f"spectrum '{self.provenance}' produced {len(values)} of "
                        f"{count} requested eigenvalues"
                    )
                # keep the longest materialization; sources are prefix-stable
                self._cache[:] = values
            return tuple(self._cache[:count])

    def __getitem__(self, index: int) -> float:
        if not isinstance(index, int) or index < 0:
            raise ArgumentError(f"index must be a non-negative integer, got {index!r}")
        return self.take(index + 1)[index]

    @property
    def max_count(self) -> int | None:
        """Largest admissible ``take`` argument, ``None`` when unbounded."""
        return self.limit

    def smallest_positive(self, zero_tol: float = 1e-12, search_cap: int = 100_000):
        """Smallest eigenvalue strictly above ``zero_tol``.

        Returns ``(value, index)``, or ``None`` when the spectrum is finite
        and contains no such eigenvalue.
        """
        cap = self.limit if self.limit is not None else search_cap
        block = 16
        n = 0
        while n < cap:
            m = min(cap, n + block)
            values = self.take(m)
            for i in range(n, m):
                if values[i] > zero_tol:
                    return values[i], i
            n = m
            block *= 2
        if self.finite:
            return None
        raise ResolutionError(
            f"no positive eigenvalue found among the first {cap} modes of "
            f"'{self.provenance}'"
        )


def _validated(values: Sequence[float], provenance: str) -> list[float]:
    out = [float(v) for v in values]
    for i, v in enumerate(out):
        if v < -NEGATIVE_TOL:
            raise ArgumentError(
                f"{provenance}: eigenvalue {v} at position {i} is negative"
            )
        if i and v < out[i - 1] - NEGATIVE_TOL:
            raise ArgumentError(f"{provenance}: eigenvalues are not non-decreasing")
    return out


def from_values(values: Sequence[float], provenance: str = "explicit") -> AngularSpectrum:
    """Spectrum backed by an explicit, complete eigenvalue list."""
    vals = tuple(_validated(values, provenance))
    if not vals:
        raise ArgumentError("explicit spectrum needs at least one eigenvalue")
    return AngularSpectrum(
        provenance=provenance,
        exhaustive=True,
        limit=len(vals),
        finite=True,
        _source=lambda n: vals[:n],
    )


def laplace_beltrami_spectrum(d: int, count: int) -> AngularSpectrum:
    """Distinct Laplace-Beltrami eigenvalues ``k (k + d - 2)``, k = 0, 1, ...

    Multiplicities are irrelevant to every constant formula (which
    minimizes over eigenvalue values), so each distinct value appears
    once.
    """
    _check_dimension(d)
    _check_count(count)
    return AngularSpectrum(
        provenance=f"laplace-beltrami(d={d})",
        _source=lambda n: [float(k * (k + d - 2)) for k in range(n)],
    )


def shifted_spectrum(base: AngularSpectrum, a: float) -> AngularSpectrum:
    """Pointwise shift ``lambda_m + a`` of ``base``; requires ``a >= 0``."""
    a = float(a)
    if not math.isfinite(a) or a < 0.0:
        raise ArgumentError(f"shift must be a finite non-negative real, got {a}")
    return AngularSpectrum(
        provenance=f"{base.provenance}+{a:g}",
        exhaustive=base.exhaustive,
        limit=base.limit,
        finite=base.finite,
        _source=lambda n: [v + a for v in base.take(n)],
    )


def ab_spectrum(d: int, flux: float, count: int) -> AngularSpectrum:
    """Aharonov-Bohm angular eigenvalues over the admissible index set.

    The eigenvalues are ``(m + flux) (m + flux + d - 2)`` for integers m
    with ``m <= 2 - d - flux`` or ``m >= -flux``; on that set each branch
    is monotone outward, so a two-pointer merge enumerates the spectrum
    in sorted order.  Values are emitted per index, duplicates included.
    """
    _check_dimension(d)
    _check_count(count)
    flux = float(flux)
    if not math.isfinite(flux):
        raise ArgumentError("flux must be finite")

    m_up0 = math.ceil(-flux)
    m_lo0 = math.floor(2 - d - flux)
    # in d = 2 with integer flux the two branch boundaries coincide;
    # the shared index must be emitted only once
    if m_lo0 >= m_up0:
        m_lo0 = m_up0 - 1

    def eig(m: int) -> float:
        t = m + flux
        return t * (t + d - 2)

    def source(n: int) -> list[float]:
        out: list[float] = []
        up, lo = m_up0, m_lo0
        while len(out) < n:
            vu, vl = eig(up), eig(lo)
            if vu <= vl:
                out.append(vu)
                up += 1
            else:
                out.append(vl)
                lo -= 1
        return out

    return AngularSpectrum(
        provenance=f"aharonov-bohm(d={d}, flux={flux:g})",
        _source=source,
    )


def monopole_spectrum(g: float, count: int) -> AngularSpectrum:
    """Monopole angular eigenvalues ``k (k + 2) / 4 - g**2``, ``k = 2 (|g| + l)``.

    The strength must satisfy ``|g| >= 1/2`` with ``2 g`` an integer.  The
    first eigenvalue simplifies to ``|g|``, so the sequence is
    non-negative.
    """
    _check_count(count)
    g = float(g)
    if not math.isfinite(g) or abs(g) < 0.5:
        raise ArgumentError(f"monopole strength must satisfy |g| >= 1/2, got {g}")
    if abs(2.0 * g - round(2.0 * g)) > 1e-12:
        raise ArgumentError(f"monopole strength must be a half-integer, got {g}")

    ag = abs(g)

    def source(n: int) -> list[float]:
        out = []
        for l in range(n):
            k = 2.0 * (ag + l)
            out.append(k * (k + 2.0) / 4.0 - g * g)
        return out

    return AngularSpectrum(
        provenance=f"monopole(g={g:g})",
        _source=source,
    )


def circle_schrodinger_spectrum(
    samples, grid_size: int, count: int
) -> AngularSpectrum:
    """Eigenvalues of ``-d^2/dtheta^2 + a(theta)`` on the circle.

    ``samples`` holds ``grid_size`` non-negative values of the potential
    on the uniform grid ``theta_n = 2 pi n / N``.  The operator is
    assembled in the real trigonometric basis ``{1, cos k theta,
    sin k theta}`` up to wavenumber ``M = N // 4`` (the potential enters
    through its discrete Fourier coefficients, so the matrix is the exact
    Galerkin compression of the band-limited interpolant of the samples)
    and diagonalized with the self-contained cyclic Jacobi solver.

    The first ``N // 4`` eigenvalues are trustworthy; requesting more
    raises :class:`ResolutionError`.  For constant potentials the matrix
    is already diagonal and the eigenvalues ``k**2 + a`` are exact.
    Being a compression of a non-negative operator plus the potential,
    the bottom eigenvalue cannot fall below the minimum of the
    (band-limited) potential.
    """
    _check_count(count)
    if not isinstance(grid_size, int) or isinstance(grid_size, bool):
        raise ArgumentError("grid size must be an integer")
    if grid_size % 2 != 0:
        raise ArgumentError(f"grid size must be even, got {grid_size}")
    a = np.asarray(samples, dtype=float)
    if a.ndim != 1 or a.size != grid_size:
        raise ArgumentError(
            f"expected {grid_size} potential samples, got shape {a.shape}"
        )
    if not np.all(np.isfinite(a)):
        raise ArgumentError("potential samples must be finite")
    if np.any(a < 0.0):
        raise ArgumentError("potential samples must be non-negative")
    if grid_size < 4 * count:
        raise ResolutionError(
            f"grid size {grid_size} is too small for {count} modes; "
            f"need at least {4 * count} points"
        )

    n_modes = grid_size // 4
    matrix = _circle_matrix(a, n_modes)
    eigs = jacobi_eigenvalues(matrix)
    eigs = np.sort(eigs)
    if eigs[0] < -1e-9 * max(1.0, float(np.abs(eigs).max())):
        raise ArgumentError("circle solver produced a significantly negative eigenvalue")
    eigs = np.maximum(eigs, 0.0)
    values = tuple(float(v) for v in eigs[: grid_size // 4])

    return AngularSpectrum(
        provenance=f"circle-schrodinger(N={grid_size})",
        exhaustive=True,
        limit=grid_size // 4,
        finite=False,
        _source=lambda n: values[:n],
    )


def _circle_matrix(a: np.ndarray, m_max: int) -> np.ndarray:
    """Real symmetric Galerkin matrix of ``-d^2/dtheta^2 + a`` up to mode ``m_max``."""
    n = a.size
    coeff = np.fft.rfft(a) / n
    # cosine/sine Fourier coefficients A_m = (1/pi) int a cos(m t) dt, etc.
    need = 2 * m_max + 1
    A = np.zeros(need)
    B = np.zeros(need)
    avail = min(need, coeff.size)
    A[:avail] = 2.0 * coeff[:avail].real
    B[:avail] = -2.0 * coeff[:avail].imag

    def A_(m: int) -> float:
        return A[m] if m < need else 0.0

    def B_(m: int) -> float:
        s = -1.0 if m < 0 else 1.0
        m = abs(m)
        return s * B[m] if m < need else 0.0

    dim = 2 * m_max + 1
    h = np.zeros((dim, dim))
    # ordering: [const, cos 1..M, sin 1..M]; derivatives give the diagonal
    for k in range(1, m_max + 1):
        h[k, k] = h[m_max + k, m_max + k] = float(k * k)

    sqrt2 = math.sqrt(2.0)
    h[0, 0] += A_(0) / 2.0
    for k in range(1, m_max + 1):
        h[0, k] = h[k, 0] = A_(k) / sqrt2
        h[0, m_max + k] = h[m_max + k, 0] = B_(k) / sqrt2
    for j in range(1, m_max + 1):
        for k in range(j, m_max + 1):
            cc = 0.5 * (A_(k - j) + A_(j + k))
            ss = 0.5 * (A_(k - j) - A_(j + k))
            h[j, k] += cc
            h[k, j] = h[j, k]
            h[m_max + j, m_max + k] += ss
            h[m_max + k, m_max + j] = h[m_max + j, m_max + k]
        for k in range(1, m_max + 1):
            cs = 0.5 * (B_(j + k) + B_(k - j))
            h[j, m_max + k] += cs
            h[m_max + k, j] = h[j, m_max + k]
    return h


def apply_exclusion(spectrum: AngularSpectrum, exclusion: ModeExclusion) -> AngularSpectrum:
    """Spectrum with the given enumeration indices removed, order preserved."""
    if not exclusion.indices:
        return spectrum
    if spectrum.limit is not None:
        bad = [i for i in exclusion.indices if i >= spectrum.limit]
        if bad:
            raise ArgumentError(
                f"excluded indices {sorted(bad)} are out of range for "
                f"'{spectrum.provenance}' (limit {spectrum.limit})"
            )
    dropped = frozenset(exclusion.indices)
    new_limit = None if spectrum.limit is None else spectrum.limit - len(dropped)
    if new_limit is not None and new_limit < 1:
        raise ArgumentError("exclusion removes every eigenvalue of a finite spectrum")

    def source(n: int) -> list[float]:
        base = spectrum.take(n + len(dropped))
        return [v for i, v in enumerate(base) if i not in dropped][:n]

    return AngularSpectrum(
        provenance=f"{spectrum.provenance} \\ {sorted(dropped)}",
        exhaustive=spectrum.exhaustive,
        limit=new_limit,
        finite=spectrum.finite,
        _source=source,
    )


def _check_dimension(d) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ArgumentError(f"dimension must be an integer >= 2, got {d!r}")


def _check_count(count) -> None:
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise ArgumentError(f"count must be a positive integer, got {count!r}")
