"""Two-mode Bose-Hubbard model of N bosons in a double-well potential.

The state space is spanned by the N+1 Fock states |k> = |n1=k, n2=N-k>,
indexed by the occupancy k of well 1 in ascending order.  In this basis the
Hamiltonian

    H = -J (a1+ a2 + a2+ a1) + (U/2) [n1 (n1 - 1) + n2 (n2 - 1)]
        + (delta/2) (n1 - n2)

is real symmetric tridiagonal.  J is the tunneling energy (with this
normalization a single particle Rabi-oscillates between the wells at angular
frequency 2J), U the two-particle on-site interaction, and delta the trap
depth difference; delta < 0 lowers the cost of occupying well 1.

Conventions used throughout the package:

* hbar = 1; energies and times are quoted in units of U whenever U > 0,
  otherwise in units of J.
* The population imbalance is z = <n1 - n2>/N in [-1, 1], diagonal and
  monotone increasing in k.
* The interaction-to-tunneling ratio is Lambda = N U / (2 J).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .eigensolve import Spectrum

__all__ = [
    "ModelParams",
    "FockIndex",
    "TridiagonalMatrix",
    "build_hamiltonian",
    "imbalance_diagonal",
    "imbalance_matrix_element",
]


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the two-mode model.

    Attributes
    ----------
    n_particles : total boson number N >= 1.
    j : tunneling energy, >= 0.
    u : on-site interaction energy, >= 0.
    delta : trap asymmetry energy, any sign (0 for the symmetric well).
    """

    n_particles: int
    j: float
    u: float
    delta: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n_particles, (int, np.integer)) or self.n_particles < 1:
            raise ValueError(f"n_particles must be an integer >= 1, got {self.n_particles!r}")
        for name in ("j", "u", "delta"):
            value = getattr(self, name)
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.j < 0:
            raise ValueError(f"tunneling energy j must be >= 0, got {self.j}")
        if self.u < 0:
            raise ValueError(f"interaction energy u must be >= 0, got {self.u}")
        if self.j == 0 and self.u == 0 and self.delta == 0:
            raise ValueError("degenerate model: j, u and delta are all zero")

    @property
    def dim(self) -> int:
        """Dimension N+1 of the Fock basis."""
        return self.n_particles + 1

    @property
    def lam(self) -> float | None:
        """Lambda = N U / (2 J); None when J = 0 (tunneling-free, undefined)."""
        if self.j == 0:
            return None
        return self.n_particles * self.u / (2.0 * self.j)


@dataclass(frozen=True)
class FockIndex:
    """Basis label: k particles in well 1, N-k in well 2."""

    k: int
    n_particles: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n_particles:
            raise ValueError(f"k must lie in [0, {self.n_particles}], got {self.k}")

    @property
    def n1(self) -> int:
        return self.k

    @property
    def n2(self) -> int:
        return self.n_particles - self.k


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Real symmetric tridiagonal matrix stored as diagonal + subdiagonal.

    offdiag[k] couples basis indices k and k+1.  Arrays are copied and frozen
    at construction.
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.array(self.diag, dtype=np.float64)
        offdiag = np.array(self.offdiag, dtype=np.float64)
        if diag.ndim != 1 or diag.size < 1:
            raise ValueError("diag must be a 1-d array with at least one element")
        if offdiag.ndim != 1 or offdiag.size != diag.size - 1:
            raise ValueError(
                f"offdiag must have length {diag.size - 1}, got {offdiag.size}"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
            raise ValueError("matrix entries must be finite")
        diag.flags.writeable = False
        offdiag.flags.writeable = False
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def dim(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        dense = np.diag(self.diag)
        idx = np.arange(self.dim - 1)
        dense[idx, idx + 1] = self.offdiag
        dense[idx + 1, idx] = self.offdiag
        return dense

    def max_row_sum(self) -> float:
        """Infinity norm, used to bound admissible integrator steps."""
        row = np.abs(self.diag).copy()
        row[:-1] += np.abs(self.offdiag)
        row[1:] += np.abs(self.offdiag)
        return float(row.max())

    def frobenius_norm(self) -> float:
        return float(np.sqrt(np.sum(self.diag**2) + 2.0 * np.sum(self.offdiag**2)))


def build_hamiltonian(params: ModelParams) -> TridiagonalMatrix:
    """Assemble the two-mode Hamiltonian in the Fock basis.

    diag[k]    = (U/2) [k(k-1) + (N-k)(N-k-1)] + (delta/2) (2k - N)
    offdiag[k] = -J sqrt((k+1)(N-k))

    The off-diagonal is strictly negative for J > 0, so the matrix is an
    unreduced Jacobi matrix with a simple spectrum.
    """
    n = params.n_particles
    k = np.arange(n + 1, dtype=np.float64)
    diag = 0.5 * params.u * (k * (k - 1.0) + (n - k) * (n - k - 1.0))
    diag += 0.5 * params.delta * (2.0 * k - n)
    kk = k[:-1]
    offdiag = -params.j * np.sqrt((kk + 1.0) * (n - kk))
    return TridiagonalMatrix(diag=diag, offdiag=offdiag)


def imbalance_diagonal(n_particles: int) -> np.ndarray:
    """Diagonal of the imbalance operator z = (n1 - n2)/N: entry k is (2k - N)/N."""
    if not isinstance(n_particles, (int, np.integer)) or n_particles < 1:
        raise ValueError(f"n_particles must be an integer >= 1, got {n_particles!r}")
    k = np.arange(n_particles + 1, dtype=np.float64)
    return (2.0 * k - n_particles) / n_particles


def imbalance_matrix_element(
    spectrum: "Spectrum", m: int, m2: int, n_particles: int
) -> float:
    """<m| (n1 - n2)/N |m2> between eigenvectors of a Spectrum.

    Symmetric in (m, m2); vanishes on the diagonal for reflection-symmetric
    (delta = 0) Hamiltonians by parity.
    """
    dim = spectrum.values.size
    for idx in (m, m2):
        if not 0 <= idx < dim:
            raise IndexError(f"eigenindex {idx} out of range [0, {dim - 1}]")
    zdiag = imbalance_diagonal(n_particles)
    return float(np.sum(spectrum.vectors[:, m] * spectrum.vectors[:, m2] * zdiag))
