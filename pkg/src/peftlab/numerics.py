"""Dense linear-algebra kernels used by every verifier.

All kernels operate on 2-D float64 arrays, reject non-finite input, and are
pure functions: no kernel mutates its argument or keeps hidden state.  SVD,
pseudo-inverse, and symmetric eigendecomposition are backed by LAPACK through
numpy; column orthonormalization and the finite-difference oracles are
implemented here directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceFailure, NonFinite, RankDeficient, RankOutOfRange

# Relative Frobenius tolerance met by double-precision dense SVD at desk sizes.
RECONSTRUCTION_TOL = 1e-9
# Singular values at or below RANK_TOL * sigma_max count as zero.
RANK_TOL = 1e-12


def _check_finite(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise NonFinite(f"{name} contains NaN or Inf")
    return a


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD: ``u @ diag(sigma) @ vt`` reconstructs the input.

    ``u`` has orthonormal columns, ``vt`` orthonormal rows, ``sigma`` is
    nonincreasing and nonnegative.
    """

    u: np.ndarray
    sigma: np.ndarray
    vt: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.sigma) @ self.vt


def svd(m: np.ndarray) -> SvdResult:
    """Thin singular value decomposition of a dense matrix.

    Raises NonFinite on NaN/Inf entries and ConvergenceFailure if the
    underlying iteration does not converge.
    """
    a = _check_finite(m)
    if a.ndim != 2 or min(a.shape) < 1:
        raise RankOutOfRange(f"expected a 2-D matrix, got shape {a.shape}")
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return SvdResult(u=u, sigma=s, vt=vt)


def pinv(m: np.ndarray, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse via SVD.

    Singular values <= ``rank_tol * sigma_max`` are treated as exactly zero.
    The result satisfies all four Penrose identities to working precision.
    """
    if rank_tol < 0:
        raise ValueError("rank_tol must be >= 0")
    res = svd(m)
    smax = res.sigma[0] if res.sigma.size else 0.0
    cutoff = rank_tol * smax
    inv = np.where(res.sigma > cutoff, 1.0 / np.where(res.sigma > cutoff, res.sigma, 1.0), 0.0)
    return (res.vt.T * inv) @ res.u.T


def rank_truncate(m: np.ndarray, r: int) -> tuple[np.ndarray, float]:
    """Best rank-``r`` approximation under the Frobenius norm.

    Returns ``(m_r, tail_energy)`` where ``m_r`` keeps the ``r`` leading
    singular triplets and ``tail_energy`` is the sum of the squared discarded
    singular values, which equals ``||m - m_r||_F**2``.
    """
    a = _check_finite(m)
    full = min(a.shape)
    if not 0 <= r <= full:
        raise RankOutOfRange(f"rank {r} outside [0, {full}]")
    if r == full:
        return a.copy(), 0.0
    res = svd(a)
    truncated = (res.u[:, :r] * res.sigma[:r]) @ res.vt[:r, :]
    tail = float(np.sum(res.sigma[r:] ** 2))
    return truncated, tail


def orthonormalize(m: np.ndarray, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis for the column span, via Gram-Schmidt.

    Uses modified Gram-Schmidt with one full reorthogonalization pass, which
    keeps Q'Q near identity at double precision.  Raises RankDeficient when a
    column falls inside the span of its predecessors.
    """
    a = _check_finite(m)
    if a.ndim == 1:
        a = a[:, None]
    n, k = a.shape
    if k > n:
        raise RankDeficient(f"{k} columns cannot be independent in dimension {n}")
    q = np.empty((n, k))
    col_scale = np.linalg.norm(a, axis=0)
    for j in range(k):
        v = a[:, j].copy()
        for _ in range(2):  # reorthogonalization pass
            for i in range(j):
                v -= (q[:, i] @ v) * q[:, i]
        norm = np.linalg.norm(v)
        if norm <= max(rank_tol, 1e-300) * max(col_scale[j], 1.0):
            raise RankDeficient(f"column {j} is numerically dependent")
        q[:, j] = v / norm
    return q


def sym_eig(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues nondecreasing and
    eigenvectors in columns.  The input is symmetrized before the call so
    round-off asymmetry cannot leak in.
    """
    a = _check_finite(m)
    sym = 0.5 * (a + a.T)
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return w, v


def spectral_norm(m: np.ndarray) -> float:
    """Operator 2-norm: the largest singular value."""
    a = _check_finite(m)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, ord=2)) if a.ndim == 2 else float(np.linalg.norm(a))


def finite_diff_gradient(
    f: Callable[[np.ndarray], float], x: np.ndarray, h: float = 1e-6
) -> np.ndarray:
    """Central-difference gradient oracle, componentwise.

    The step for coordinate i is ``h * (1 + |x_i|)`` so absolute and relative
    scales are both covered.
    """
    if h <= 0:
        raise ValueError("h must be > 0")
    x = _check_finite(x, "point")
    grad = np.empty_like(x)
    for i in range(x.size):
        step = h * (1.0 + abs(x[i]))
        xp = x.copy()
        xm = x.copy()
        xp[i] += step
        xm[i] -= step
        fp = f(xp)
        fm = f(xm)
        if not (np.isfinite(fp) and np.isfinite(fm)):
            raise NonFinite(f"function non-finite near coordinate {i}")
        grad[i] = (fp - fm) / (2.0 * step)
    return grad


def finite_diff_hessian(
    grad_fn: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float = 1e-5
) -> np.ndarray:
    """Hessian oracle: central differences of an exact gradient, columnwise."""
    if h <= 0:
        raise ValueError("h must be > 0")
    x = _check_finite(x, "point")
    d = x.size
    hess = np.empty((d, d))
    for i in range(d):
        step = h * (1.0 + abs(x[i]))
        xp = x.copy()
        xm = x.copy()
        xp[i] += step
        xm[i] -= step
        gp = grad_fn(xp)
        gm = grad_fn(xm)
        if not (np.all(np.isfinite(gp)) and np.all(np.isfinite(gm))):
            raise NonFinite(f"gradient non-finite near coordinate {i}")
        hess[:, i] = (gp - gm) / (2.0 * step)
    return hess
