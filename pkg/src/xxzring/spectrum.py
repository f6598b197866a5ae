"""Eigenspectra of the XXZ ring: numeric solvers and closed forms.

For five sites every eigenvalue is available in closed form.  With
c1(k) = cos(2 pi k / 5) and c2(k) = cos(4 pi k / 5), k = 1..5:

  * aligned sector (no reversed spins):     E = 5 * (1 + (D - 1)/2)
  * one reversed spin, momentum k:          E = 3 + (D - 1)/2 + 2*c1(k)
  * two reversed spins, momentum k:         E = (5 - D + 2*c2(k))/2
                                                +/- sqrt((D - c2)^2 + 2*(1 + c1))
with D the anisotropy.  Each level is doubly degenerate because the global
spin flip maps the r-reversed-spin sector onto the (5-r) one, giving 32
eigenvalues in total.  The anisotropy derivative of every closed-form level
is carried along for correlation-function work: 5/2, 1/2 and
-1/2 +/- (D - c2)/sqrt((D - c2)^2 + 2*(1 + c1)) respectively.

The four-site ring gets its ground level in closed form as well:
E = 2 - D - sqrt(D^2 + 8), with derivative -1 - D/sqrt(D^2 + 8).
"""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .hamiltonian import CapacityError, ModelParams, block_matrix, full_matrix

EIG_MAX_DIM = 1 << 14
SECTORS_MAX_SITES = 16
_RESIDUAL_CHECK_DIM = 64


@dataclass(frozen=True)
class Level:
    """One energy level: energy, multiplicity and optional extras.

    d_energy_d_delta is the anisotropy derivative where a closed form
    provides it; sector tags levels as (reversed spins r, momentum index k).
    """

    energy: float
    multiplicity: int = 1
    d_energy_d_delta: float | None = None
    sector: tuple[int, int] | None = None


@dataclass
class Spectrum:
    """Complete list of levels, kept sorted by energy."""

    levels: list[Level] = field(default_factory=list)

    def __post_init__(self):
        self.levels = sorted(self.levels, key=lambda lv: lv.energy)

    @property
    def total_dim(self) -> int:
        return sum(lv.multiplicity for lv in self.levels)

    @property
    def min_energy(self) -> float:
        return self.levels[0].energy

    @property
    def has_derivatives(self) -> bool:
        return all(lv.d_energy_d_delta is not None for lv in self.levels)

    def energies(self) -> np.ndarray:
        """Energies expanded with multiplicity, ascending."""
        return np.repeat(
            [lv.energy for lv in self.levels], [lv.multiplicity for lv in self.levels]
        )

    def derivatives(self) -> np.ndarray:
        """Anisotropy derivatives expanded with multiplicity."""
        if not self.has_derivatives:
            raise ValueError("spectrum has levels without anisotropy derivatives")
        return np.repeat(
            [lv.d_energy_d_delta for lv in self.levels],
            [lv.multiplicity for lv in self.levels],
        )

    def ground_multiplicity(self, tol: float = 1e-9) -> int:
        """Total multiplicity of levels within tol of the minimum energy."""
        e0 = self.min_energy
        return sum(lv.multiplicity for lv in self.levels if lv.energy <= e0 + tol)


class GroundState(NamedTuple):
    energy: float
    d_energy_d_delta: float


def eig_self_adjoint(matrix: np.ndarray) -> np.ndarray:
    """All eigenvalues of a self-adjoint matrix, ascending.

    Raises if the input is not self-adjoint.  On small matrices the
    eigenpairs are recomputed and residual-checked.
    """
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    dim = m.shape[0]
    if dim > EIG_MAX_DIM:
        raise CapacityError(f"dimension {dim} exceeds dense limit {EIG_MAX_DIM}")
    if dim == 0:
        return np.zeros(0)
    scale = max(1.0, np.abs(m).max())
    if np.abs(m - m.conj().T).max() > 1e-10 * scale:
        raise ValueError("matrix is not self-adjoint")
    if dim <= _RESIDUAL_CHECK_DIM:
        vals, vecs = np.linalg.eigh(m)
        residual = np.abs(m @ vecs - vecs * vals).max()
        if residual > 1e-10 * scale:
            raise ArithmeticError(f"eigensolver residual {residual:.3e} too large")
        return vals
    return np.linalg.eigvalsh(m)


def spectrum_closed_n5(anisotropy: float, exchange: float = 1.0) -> Spectrum:
    """Closed-form spectrum of the five-site ring: 16 levels, multiplicity 2 each.

    Every level carries its anisotropy derivative and an (r, k) tag from the
    lower of its spin-flip-paired sectors.
    """
    if anisotropy < 0:
        raise ValueError("anisotropy must be >= 0")
    d, j = anisotropy, exchange
    levels = [Level(j * 5 * (1 + (d - 1) / 2), 2, j * 2.5, (0, 5))]
    for k in range(1, 6):
        c1 = np.cos(2 * np.pi * k / 5)
        c2 = np.cos(4 * np.pi * k / 5)
        levels.append(Level(j * (3 + (d - 1) / 2 + 2 * c1), 2, j * 0.5, (1, k)))
        root = np.sqrt((d - c2) ** 2 + 2 * (1 + c1))
        base = (5 - d + 2 * c2) / 2
        for sign in (1.0, -1.0):
            levels.append(
                Level(j * (base + sign * root), 2, j * (-0.5 + sign * (d - c2) / root), (2, k))
            )
    return Spectrum(levels)


def ground_state_n5(anisotropy: float, exchange: float = 1.0) -> GroundState:
    """Five-site ground energy and its anisotropy derivative.

    The ground level is the minus branch of the two-reversed-spin pair at
    k = 1; this is re-checked against the full closed spectrum and a failure
    raises, flagging parameters outside the validated regime.
    """
    d, j = anisotropy, exchange
    c1 = np.cos(2 * np.pi / 5)
    c2 = np.cos(4 * np.pi / 5)
    root = np.sqrt((d - c2) ** 2 + 2 * (1 + c1))
    energy = j * ((5 - d + 2 * c2) / 2 - root)
    derivative = j * (-0.5 - (d - c2) / root)
    spec_min = spectrum_closed_n5(anisotropy, exchange).min_energy
    if energy > spec_min + 1e-9 * max(1.0, abs(spec_min)):
        raise ValueError(
            f"k=1 minus level {energy} is not the spectrum minimum {spec_min} "
            f"at anisotropy {anisotropy}"
        )
    return GroundState(energy, derivative)


def ground_state_n4(anisotropy: float, exchange: float = 1.0) -> GroundState:
    """Four-site ground energy 2 - D - sqrt(D^2 + 8) and its derivative."""
    if anisotropy < 0:
        raise ValueError("anisotropy must be >= 0")
    d, j = anisotropy, exchange
    root = np.sqrt(d * d + 8)
    return GroundState(j * (2 - d - root), j * (-1 - d / root))


def spectrum_numeric(params: ModelParams, via: str = "full") -> Spectrum:
    """Complete spectrum by dense diagonalization.

    via="full" diagonalizes the 2^N matrix; via="sectors" concatenates the
    (r, k) momentum blocks and tags each level with its sector.  No
    anisotropy derivatives are attached (degenerate crossings make
    eigenvalue derivatives ambiguous); correlation functions for numeric
    spectra come from finite differences of the log partition function.
    """
    if via == "full":
        vals = eig_self_adjoint(full_matrix(params))
        return Spectrum([Level(float(e)) for e in vals])
    if via == "sectors":
        n = params.n_sites
        if n > SECTORS_MAX_SITES:
            raise CapacityError(f"sector path limited to {SECTORS_MAX_SITES} sites, got {n}")
        levels = []
        for r in range(n + 1):
            for k in range(1, n + 1):
                block = block_matrix(params, r, k)
                for e in eig_self_adjoint(block):
                    levels.append(Level(float(e), sector=(r, k)))
        return Spectrum(levels)
    raise ValueError(f"unknown diagonalization path {via!r}")
