"""Dense linear-algebra kernel for small real/complex matrices.

Everything in this package works on plain numpy arrays: float64 2-D arrays
for the real case, complex128 for the complex case. This module supplies
the Hilbert-Schmidt inner product, factorizations with a fixed ordering
convention, the shared tolerance policy, and random group elements used by
the searches and the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "hs_inner",
    "frobenius_norm",
    "orthogonality_residual",
    "is_real_matrix",
    "svd",
    "symmetric_eigen",
    "random_orthogonal",
    "random_unitary",
]


@dataclass(frozen=True)
class Tolerance:
    """Residual thresholds used across the package.

    eps_orth bounds unitarity/orthogonality residuals, eps_feas bounds
    feasibility residuals of the polynomial systems and searches, eps_match
    bounds entrywise matching of matrices against canonical targets.
    """

    eps_orth: float = 1e-10
    eps_feas: float = 1e-8
    eps_match: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.eps_orth > 0 and self.eps_feas > 0 and self.eps_match > 0):
            raise ValueError("tolerances must be strictly positive")
        if not (self.eps_orth <= self.eps_feas <= self.eps_match):
            raise ValueError("tolerances must satisfy eps_orth <= eps_feas <= eps_match")

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.eps_orth * factor, self.eps_feas * factor, self.eps_match * factor)


DEFAULT_TOL = Tolerance()


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    return m


def is_real_matrix(a: np.ndarray) -> bool:
    return not np.iscomplexobj(a)


def hs_inner(a: np.ndarray, b: np.ndarray):
    """Hilbert-Schmidt inner product tr(a^dagger b).

    Computed as the entrywise sum conj(a)*b, which agrees exactly with the
    trace formula and uses no matrix product. Returns a float for two real
    inputs, complex otherwise.
    """
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if is_real_matrix(a) != is_real_matrix(b):
        raise ValueError("field mismatch: one operand is real, the other complex")
    value = np.sum(np.conj(a) * b)
    return float(value.real) if is_real_matrix(a) else complex(value)


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def orthogonality_residual(a: np.ndarray) -> float:
    """Frobenius distance of a^dagger a from the identity."""
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("orthogonality residual needs a square matrix")
    gram = a.conj().T @ a
    return float(np.linalg.norm(gram - np.eye(a.shape[0])))


def svd(m: np.ndarray):
    """Singular value decomposition m = u @ diag(sigma) @ v^dagger.

    sigma is nonnegative and sorted descending; for a real input u and v
    are real orthogonal. Note the convention: the third factor returned is
    v itself, not v^dagger.
    """
    m = _as_matrix(m)
    u, sigma, vh = np.linalg.svd(m)
    return u, sigma, vh.conj().T


def symmetric_eigen(m: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Eigendecomposition m = p.T @ diag(w) @ p of a real symmetric matrix.

    Eigenvalues come back sorted descending, and the rows of p are the
    matching orthonormal eigenvectors. Raises if the input is not real
    symmetric within tol.eps_orth (relative to its norm).
    """
    m = _as_matrix(m)
    if not is_real_matrix(m):
        raise ValueError("symmetric_eigen expects a real matrix")
    if m.shape[0] != m.shape[1]:
        raise ValueError("symmetric_eigen expects a square matrix")
    scale = 1.0 + frobenius_norm(m)
    if frobenius_norm(m - m.T) > tol.eps_orth * scale:
        raise ValueError("matrix is not symmetric within tolerance")
    w, q = np.linalg.eigh(m)
    order = np.argsort(-w, kind="stable")
    return w[order], q[:, order].T


def random_orthogonal(n: int, rng: np.random.Generator, det: int | None = None) -> np.ndarray:
    """Haar-distributed random orthogonal matrix, optionally with fixed determinant.

    Uses the QR construction with the R-diagonal sign fix so the
    distribution is uniform over O(n).
    """
    z = rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    q = q * np.sign(np.diag(r))
    if det is not None:
        if det not in (-1, 1):
            raise ValueError("det must be +1 or -1")
        if np.sign(np.linalg.det(q)) != det:
            q[:, 0] = -q[:, 0]
    return q


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
