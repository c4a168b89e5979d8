"""Local noise channels and their action on Bell-diagonal states.

Four single-qubit Kraus families are built here: bit flip (BF), phase flip
(PF), bit-phase flip (BPF) and generalized amplitude damping (GAD).  Each
acts on a two-qubit state as the product channel

    Phi(rho) = sum_ij (E_i (x) E_j) rho (E_i (x) E_j)^dagger.

On Bell-diagonal input the flip channels (and GAD at p = 1/2) preserve the
Bell-diagonal form and just rescale the correlation coefficients; that
coefficient map is stored declaratively and cross-validated against the
Kraus evolution by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import OrthonormalBasis
from .coherence import coherence
from .linalg import EYE2, SIGMA1, SIGMA2, SIGMA3, dagger, kron
from .states import BellDiagonalParams, DensityMatrix, bell_diagonal

CHANNEL_KINDS = ("BF", "PF", "BPF", "GAD")

# Kraus completeness tolerance: sum_k E_k^dagger E_k must equal I this tightly.
COMPLETENESS_TOL = 1e-12

# Exponent of (1 - p) applied to each correlation coefficient (c1, c2, c3)
# when the product channel acts on a Bell-diagonal state.  For GAD the map
# holds with the damping strength gamma playing the role of p and the
# mixing parameter fixed at 1/2.
COEFFICIENT_POWERS: dict[str, tuple[int, int, int]] = {
    "BF": (0, 2, 2),
    "PF": (2, 2, 0),
    "BPF": (2, 0, 2),
    "GAD": (1, 1, 2),
}

# GAD mixing parameter at which the Bell-diagonal form is preserved.
GAD_FORM_PRESERVING_P = 0.5


@dataclass(frozen=True)
class KrausChannel:
    """A completeness-checked set of single-qubit Kraus operators."""

    label: str
    operators: tuple[np.ndarray, ...]
    p: float
    gamma: float | None = None

    def __post_init__(self) -> None:
        ops = tuple(np.asarray(op, dtype=complex) for op in self.operators)
        for op in ops:
            op.flags.writeable = False
        object.__setattr__(self, "operators", ops)
        total = sum(dagger(op) @ op for op in ops)
        defect = float(np.abs(total - np.eye(ops[0].shape[0])).max())
        if defect > COMPLETENESS_TOL:
            raise ValueError(f"Kraus set is not complete: defect {defect:.3e}")


def make_channel(kind: str, p: float, gamma: float | None = None) -> KrausChannel:
    """Build one of the four channels.

    BF/PF/BPF: E0 = sqrt(1 - p/2) I, E1 = sqrt(p/2) sigma.
    GAD: four operators parameterized by mixing p and damping gamma.
    p (and gamma) live on the closed interval [0, 1]; the endpoints are
    needed for decay limits even though interior values are the generic case.
    """
    if kind not in CHANNEL_KINDS:
        raise ValueError(f"unknown channel kind {kind!r}; expected one of {CHANNEL_KINDS}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if kind != "GAD":
        if gamma is not None:
            raise ValueError(f"{kind} takes no gamma parameter")
        sigma = {"BF": SIGMA1, "PF": SIGMA3, "BPF": SIGMA2}[kind]
        ops = (np.sqrt(1.0 - p / 2.0) * EYE2, np.sqrt(p / 2.0) * sigma)
        return KrausChannel(label=kind, operators=ops, p=p)
    if gamma is None:
        raise ValueError("GAD requires a gamma parameter")
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma={gamma} outside [0, 1]")
    sp, sq = np.sqrt(p), np.sqrt(1.0 - p)
    sg, sh = np.sqrt(gamma), np.sqrt(1.0 - gamma)
    ops = (
        sp * np.array([[1.0, 0.0], [0.0, sh]], dtype=complex),
        sp * np.array([[0.0, sg], [0.0, 0.0]], dtype=complex),
        sq * np.array([[sh, 0.0], [0.0, 1.0]], dtype=complex),
        sq * np.array([[0.0, 0.0], [sg, 0.0]], dtype=complex),
    )
    return KrausChannel(label=kind, operators=ops, p=p, gamma=gamma)


def gad_reduced(p: float) -> KrausChannel:
    """GAD in its one-parameter form: mixing fixed at 1/2, damping swept.

    This is the form whose action on Bell-diagonal states matches the
    declarative coefficient map with the damping strength as 'p'.
    """
    return make_channel("GAD", GAD_FORM_PRESERVING_P, gamma=p)


def apply_product_channel(channel: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """Apply the two-qubit product channel built from a single-qubit Kraus set."""
    if rho.dim != 4:
        raise ValueError(f"expected a two-qubit state, got dimension {rho.dim}")
    out = np.zeros((4, 4), dtype=complex)
    for ei in channel.operators:
        for ej in channel.operators:
            k = kron(ei, ej)
            out += k @ rho.matrix @ dagger(k)
    return DensityMatrix(out)


def predicted_coefficients(kind: str, params: BellDiagonalParams, p: float) -> BellDiagonalParams:
    """Correlation coefficients after the channel, from the declarative map.

    Valid for BF/PF/BPF at any p; for GAD, p here is the damping strength
    of the reduced one-parameter form.
    """
    if kind not in COEFFICIENT_POWERS:
        raise ValueError(f"unknown channel kind {kind!r}; expected one of {CHANNEL_KINDS}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    powers = COEFFICIENT_POWERS[kind]
    c = [ci * (1.0 - p) ** k for ci, k in zip(params.triple, powers)]
    return BellDiagonalParams(*c)


def predicted_coefficient_grid(kind: str, c1, c2, c3, p: float):
    """Elementwise version of :func:`predicted_coefficients` for field sampling."""
    powers = COEFFICIENT_POWERS[kind]
    return tuple(np.asarray(ci) * (1.0 - p) ** k for ci, k in zip((c1, c2, c3), powers))


def channel_as_kraus(kind: str, p: float) -> KrausChannel:
    """The Kraus set whose Bell-diagonal action the coefficient map predicts."""
    return gad_reduced(p) if kind == "GAD" else make_channel(kind, p)


def dynamics_curve(
    kind: str,
    params: BellDiagonalParams,
    basis: OrthonormalBasis,
    p_grid,
) -> list[tuple[float, float]]:
    """Coherence of the channel output at each p on the grid.

    Evaluated through the coefficient map (the input is Bell-diagonal, so
    the output state is Bell-diagonal too) with the numeric coherence route
    on the resulting state.
    """
    out = []
    for p in np.asarray(p_grid, dtype=float):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"grid point p={p} outside [0, 1]")
        moved = bell_diagonal(predicted_coefficients(kind, params, float(p)))
        out.append((float(p), coherence(moved, basis)))
    return out
