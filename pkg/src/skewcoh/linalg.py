"""Dense complex linear algebra for small operator matrices.

Everything operates on plain complex ndarrays.  States, observables and
Kraus operators in this package are square matrices of dimension 2 or 4;
the helpers check shapes and hermiticity instead of trusting the caller.
All functions are pure and never mutate their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Max-abs asymmetry accepted before a matrix stops counting as Hermitian.
HERMITICITY_TOL = 1e-10
# Eigenvalues in [PSD_FLOOR, 0) are rounding noise and clamp to zero;
# anything below PSD_FLOOR is a genuinely non-PSD input.
PSD_FLOOR = -1e-10

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
EYE2 = np.eye(2, dtype=complex)
for _m in (SIGMA1, SIGMA2, SIGMA3, EYE2):
    _m.flags.writeable = False


def as_square(a: np.ndarray) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting any other shape."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of two equally sized square matrices."""
    a, b = as_square(a), as_square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product; result dimension is the product of the inputs'."""
    return np.kron(as_square(a), as_square(b))


def trace(a: np.ndarray) -> complex:
    """Sum of the diagonal."""
    return complex(np.trace(as_square(a)))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[a, b] = ab - ba."""
    a, b = as_square(a), as_square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b - b @ a


def hermiticity_defect(a: np.ndarray) -> float:
    """Max-abs entry of a - a^dagger."""
    a = as_square(a)
    return float(np.abs(a - a.conj().T).max()) if a.size else 0.0


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return hermiticity_defect(a) <= tol


def require_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_square(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: asymmetry {defect:.3e} > {tol:.1e}")
    return a


@dataclass(frozen=True)
class HermitianEigenDecomposition:
    """Spectral decomposition a = V diag(w) V^dagger.

    ``eigenvalues`` are real and sorted ascending; column i of
    ``eigenvectors`` is the unit eigenvector for ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def reconstruction_error(self, a: np.ndarray) -> float:
        return float(np.abs(self.reconstruct() - a).max())

    def unitarity_defect(self) -> float:
        v = self.eigenvectors
        return float(np.abs(v.conj().T @ v - np.eye(v.shape[0])).max())


def hermitian_eig(a: np.ndarray, tol: float = HERMITICITY_TOL) -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Backed by LAPACK via ``numpy.linalg.eigh``; a failure to converge
    surfaces as ``numpy.linalg.LinAlgError``.
    """
    a = require_hermitian(a, tol)
    w, v = np.linalg.eigh(a)
    return HermitianEigenDecomposition(eigenvalues=w, eigenvectors=v)


def sqrt_psd(a: np.ndarray, floor: float = PSD_FLOOR) -> np.ndarray:
    """Hermitian PSD square root R with R @ R == a.

    Eigenvalues in [floor, 0) are clamped to zero before the root;
    anything below ``floor`` raises, because the input is then not a
    rounding-perturbed PSD matrix but an invalid one.  Positive
    eigenvalues inside the eigensolver's own rounding bound of zero are
    zeroed as well: the square root amplifies noise of size eps to
    sqrt(eps), which would otherwise dominate downstream differences.
    """
    dec = hermitian_eig(a)
    w = dec.eigenvalues
    if w.size and w[0] < floor:
        raise ValueError(f"matrix is not PSD: min eigenvalue {w[0]:.3e} < {floor:.1e}")
    noise = w.size * np.finfo(float).eps * max(float(w[-1]), 0.0) if w.size else 0.0
    w = np.where(w <= noise, 0.0, w)
    v = dec.eigenvectors
    root = (v * np.sqrt(w)) @ v.conj().T
    # symmetrize away the last few ulps so downstream hermiticity checks pass
    return 0.5 * (root + root.conj().T)
