"""Complex vectors, the Hermitian inner product, and unitary matrices.

Convention used throughout the package: ``inner(u, v)`` is linear in its
first argument and conjugate-linear in the second,

    inner(u, v) = sum_k u_k * conj(v_k).
"""

from __future__ import annotations

import numpy as np

#: Per-entry tolerance for "is this matrix unitary" checks.
UNITARY_TOL = 1e-12

#: Largest condition number accepted by :func:`solve`.
COND_MAX = 1e8

#: Relative residual required of a solution returned by :func:`solve`.
SOLVE_RESIDUAL_TOL = 1e-10


class SingularMatrixError(ValueError):
    """Raised when a linear system is singular or too ill-conditioned."""


def as_vector(u) -> np.ndarray:
    """Coerce ``u`` to a finite one-dimensional complex array."""
    arr = np.asarray(u, dtype=complex)
    if arr.ndim != 1:
        msg = f"expected a one-dimensional vector, got shape {arr.shape}"
        raise ValueError(msg)
    if not np.all(np.isfinite(arr)):
        msg = "vector entries must be finite"
        raise ValueError(msg)
    return arr


def inner(u, v) -> complex:
    """Hermitian inner product, linear in ``u``, conjugate-linear in ``v``."""
    u = as_vector(u)
    v = as_vector(v)
    if u.shape != v.shape:
        msg = f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}"
        raise ValueError(msg)
    # np.vdot conjugates its *first* argument.
    return complex(np.vdot(v, u))


def norm(u) -> float:
    """Euclidean norm ``sqrt(inner(u, u))``."""
    return float(np.linalg.norm(as_vector(u)))


def haar_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed ``n x n`` unitary matrix.

    Deterministic for a fixed integer seed; also accepts a
    ``numpy.random.Generator``.  Uses the QR decomposition of a complex
    Ginibre matrix with the phases of R's diagonal absorbed into Q, which
    makes the distribution exactly Haar rather than merely unitary.
    """
    if n < 1:
        msg = f"dimension must be >= 1, got {n}"
        raise ValueError(msg)
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g / np.sqrt(2.0))
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return q


def unitarity_defect(U) -> float:
    """Largest entry of ``|U^H U - I|`` (0 for an exactly unitary matrix)."""
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        msg = f"expected a square matrix, got shape {U.shape}"
        raise ValueError(msg)
    eye = np.eye(U.shape[0])
    return float(np.max(np.abs(U.conj().T @ U - eye)))


def is_unitary(U, tol: float = UNITARY_TOL) -> bool:
    """True when every entry of ``U^H U - I`` is at most ``tol`` in modulus."""
    return unitarity_defect(U) <= tol


def solve(A, b, cond_max: float = COND_MAX) -> np.ndarray:
    """Solve ``A x = b`` for a small well-conditioned square system.

    Raises :class:`SingularMatrixError` when the condition number exceeds
    ``cond_max`` or the computed solution fails the residual bound
    ``norm(A x - b) <= 1e-10 * norm(b)``.
    """
    A = np.asarray(A, dtype=complex)
    b = as_vector(b)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        msg = f"expected a square matrix, got shape {A.shape}"
        raise ValueError(msg)
    if A.shape[0] != b.shape[0]:
        msg = f"dimension mismatch: matrix {A.shape[0]}, vector {b.shape[0]}"
        raise ValueError(msg)
    if not np.all(np.isfinite(A)):
        msg = "matrix entries must be finite"
        raise ValueError(msg)
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > cond_max:
        msg = f"derivative not invertible (condition estimate {cond:.3e})"
        raise SingularMatrixError(msg)
    x = np.linalg.solve(A, b)
    bnorm = float(np.linalg.norm(b))
    residual = float(np.linalg.norm(A @ x - b))
    if residual > SOLVE_RESIDUAL_TOL * bnorm:
        msg = (
            f"derivative not invertible (solve residual {residual:.3e} "
            f"exceeds {SOLVE_RESIDUAL_TOL:.1e} * norm(b))"
        )
        raise SingularMatrixError(msg)
    return x
