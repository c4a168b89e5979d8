"""Two-qubit state families and their parameter spaces.

The families built here are the maximally mixed marginal states
(Bell-diagonal), their z-polarized X-shaped extension, and the Werner and
isotropic one-parameter slices.  Every constructor returns a validated
:class:`DensityMatrix`; invalid parameters are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import EYE2, SIGMA1, SIGMA2, SIGMA3, as_square, hermiticity_defect

# Validation tolerances for density matrices (double precision, dims <= 4).
STATE_TOL = 1e-10
# Slack on the four exact tetrahedron inequalities.
TETRA_TOL = 1e-12

EYE4 = np.kron(EYE2, EYE2)
EYE4.flags.writeable = False

PAULI_PAIRS = (np.kron(SIGMA1, SIGMA1), np.kron(SIGMA2, SIGMA2), np.kron(SIGMA3, SIGMA3))
for _m in PAULI_PAIRS:
    _m.flags.writeable = False


@dataclass(frozen=True)
class DensityMatrix:
    """A quantum state: Hermitian, unit trace, positive semidefinite.

    All three properties are checked on construction (hermiticity and trace
    to ``STATE_TOL``, eigenvalues allowed down to ``-STATE_TOL``), and the
    stored array is frozen so instances stay immutable.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_square(self.matrix).copy()
        defect = hermiticity_defect(m)
        if defect > STATE_TOL:
            raise ValueError(f"not a state: hermiticity defect {defect:.3e}")
        tr = np.trace(m)
        if abs(tr - 1.0) > STATE_TOL:
            raise ValueError(f"not a state: trace {tr:.12g} != 1")
        w = np.linalg.eigvalsh(m)
        if w[0] < -STATE_TOL:
            raise ValueError(f"not a state: min eigenvalue {w[0]:.3e}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def tetrahedron_margins(c1: float, c2: float, c3: float) -> tuple[float, float, float, float]:
    """The four linear physicality margins; each equals 4x an eigenvalue
    of the Bell-diagonal state, so the state is physical iff all are >= 0.

    Grouped as (1 -+ c3) -+ (c1 +- c2) so the values agree bit for bit
    with the block-eigenvalue route used for the X-state family.
    """
    low = 1.0 - c3
    high = 1.0 + c3
    s = c1 + c2
    d = c1 - c2
    return (low - s, low + s, high + d, high - d)


@dataclass(frozen=True)
class BellDiagonalParams:
    """Correlation coefficients (c1, c2, c3) of a Bell-diagonal state.

    Valid points form a tetrahedron inside [-1, 1]^3, carved out by four
    linear inequalities (exact eigenvalue formulas, no diagonalization).
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "c3"):
            v = getattr(self, name)
            if not -1.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [-1, 1]")
        worst = min(tetrahedron_margins(self.c1, self.c2, self.c3))
        if worst < -TETRA_TOL:
            raise ValueError(
                f"(c1, c2, c3)=({self.c1}, {self.c2}, {self.c3}) is unphysical: "
                f"tetrahedron margin {worst:.3e}"
            )

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class XStateZParams:
    """Parameters of the z-polarized X state: local Bloch z-components
    r, s plus correlation coefficients (c1, c2, c3).

    No simple closed inequality carves out the physical region, so the
    assembled matrix is diagonalized numerically at construction.
    """

    r: float
    s: float
    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        for name in ("r", "s", "c1", "c2", "c3"):
            v = getattr(self, name)
            if not -1.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [-1, 1]")
        w = np.linalg.eigvalsh(_xz_matrix(self.r, self.s, self.c1, self.c2, self.c3))
        if w[0] < -STATE_TOL:
            raise ValueError(
                f"(r, s, c)=({self.r}, {self.s}, {self.c1}, {self.c2}, {self.c3}) "
                f"is unphysical: min eigenvalue {w[0]:.3e}"
            )


def _bd_matrix(c1: float, c2: float, c3: float) -> np.ndarray:
    m = EYE4.copy()
    for c, pp in zip((c1, c2, c3), PAULI_PAIRS):
        m = m + c * pp
    return 0.25 * m


def _xz_matrix(r: float, s: float, c1: float, c2: float, c3: float) -> np.ndarray:
    m = 4.0 * _bd_matrix(c1, c2, c3)
    m = m + r * np.kron(SIGMA3, EYE2) + s * np.kron(EYE2, SIGMA3)
    return 0.25 * m


def bell_diagonal(params: BellDiagonalParams) -> DensityMatrix:
    """(1/4)(I (x) I + sum_i c_i sigma_i (x) sigma_i) in the computational basis."""
    return DensityMatrix(_bd_matrix(*params.triple))


def x_state_z(params: XStateZParams) -> DensityMatrix:
    """Bell-diagonal state plus local z terms (r/4) sigma3 (x) I + (s/4) I (x) sigma3."""
    return DensityMatrix(_xz_matrix(params.r, params.s, params.c1, params.c2, params.c3))


def werner(p: float) -> DensityMatrix:
    """One-parameter Werner slice: all three coefficients equal 3p/4 - 1.

    p = 0 is the singlet, p = 1 the most mixed member of the family.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    c = 0.75 * p - 1.0
    return bell_diagonal(BellDiagonalParams(c, c, c))


def isotropic(fidelity: float) -> DensityMatrix:
    """Isotropic slice: c1 = c3 = (4F - 1)/3 and c2 = -(4F - 1)/3.

    F is the fidelity with the maximally entangled target; F = 1/4 gives
    the maximally mixed state.
    """
    if not 0.0 <= fidelity <= 1.0:
        raise ValueError(f"F={fidelity} outside [0, 1]")
    u = (4.0 * fidelity - 1.0) / 3.0
    return bell_diagonal(BellDiagonalParams(u, -u, u))


def correlation_coefficients(rho: DensityMatrix | np.ndarray) -> tuple[float, float, float]:
    """Read back (c1, c2, c3) as tr(rho sigma_i (x) sigma_i).

    Inverts the Bell-diagonal construction for any 4x4 state; the traces
    are real for Hermitian input and the residual imaginary part is
    checked against STATE_TOL.
    """
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_square(rho)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {m.shape}")
    out = []
    for pp in PAULI_PAIRS:
        t = np.trace(m @ pp)
        if abs(t.imag) > STATE_TOL:
            raise ValueError(f"correlation coefficient has imaginary part {t.imag:.3e}")
        out.append(float(t.real))
    return tuple(out)


def local_bloch_vectors(rho: DensityMatrix | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Single-qubit Bloch vectors (r, s) with r_i = tr(rho sigma_i (x) I)."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_square(rho)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {m.shape}")
    r = np.array([np.trace(m @ np.kron(sig, EYE2)).real for sig in (SIGMA1, SIGMA2, SIGMA3)])
    s = np.array([np.trace(m @ np.kron(EYE2, sig)).real for sig in (SIGMA1, SIGMA2, SIGMA3)])
    return r, s
