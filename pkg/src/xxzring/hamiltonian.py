"""XXZ exchange Hamiltonian on a periodic ring, full and momentum-block forms.

Per bond (i, i+1) the Hamiltonian carries
    (J/2) * (1 + sx.sx + sy.sy + anisotropy * sz.sz),
summed over all n_sites bonds of the ring (site n_sites+1 = site 1).  In the
bit basis the sx.sx + sy.sy part hops antiparallel neighbor pairs with
amplitude J; parallel pairs only contribute to the diagonal.  On a 2-site
ring both bonds connect the same pair, so that pair is counted twice.

Magnetization and translation are conserved, so the full 2^N matrix splits
into (r, k) blocks over the momentum bases of :mod:`xxzring.basis`.
"""

from dataclasses import dataclass

import numpy as np

from .basis import MomentumBasis, SpinState, momentum_basis, shift_bits

FULL_MATRIX_MAX_SITES = 14


class CapacityError(ValueError):
    """Requested system size exceeds what the dense implementation supports."""


@dataclass(frozen=True)
class ModelParams:
    """Ring size, anisotropy and exchange constant (energy units)."""

    n_sites: int
    anisotropy: float
    exchange: float = 1.0

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError("need at least 2 sites")
        if not np.isfinite(self.anisotropy) or self.anisotropy < 0:
            raise ValueError(f"anisotropy must be >= 0, got {self.anisotropy}")
        if not np.isfinite(self.exchange) or self.exchange <= 0:
            raise ValueError(f"exchange must be > 0, got {self.exchange}")


def apply_hamiltonian(params: ModelParams, state: SpinState) -> list[tuple[SpinState, float]]:
    """Expand H|state> as a list of (basis state, amplitude) pairs.

    The diagonal entry comes last; hop targets appear in bond order.
    """
    n, j, delta = params.n_sites, params.exchange, params.anisotropy
    if state.n_sites != n:
        raise ValueError("state size does not match model")
    bits = state.bits
    out = []
    diag = 0.0
    for i in range(n):
        ip = (i + 1) % n
        zi = 1.0 - 2.0 * ((bits >> i) & 1)
        zp = 1.0 - 2.0 * ((bits >> ip) & 1)
        diag += 0.5 * j * (1.0 + delta * zi * zp)
        if zi != zp:
            out.append((SpinState(bits ^ ((1 << i) | (1 << ip)), n), j))
    out.append((state, diag))
    return out


def full_matrix(params: ModelParams) -> np.ndarray:
    """Dense real-symmetric Hamiltonian over all 2^N basis states.

    The sx.sx, sy.sy, sz.sz terms are traceless, so the trace equals
    (J/2) * n_sites * 2^N from the constant alone.
    """
    n, j, delta = params.n_sites, params.exchange, params.anisotropy
    if n > FULL_MATRIX_MAX_SITES:
        raise CapacityError(f"full matrix limited to {FULL_MATRIX_MAX_SITES} sites, got {n}")
    dim = 1 << n
    x = np.arange(dim)
    m = np.zeros((dim, dim))
    diag = np.full(dim, 0.5 * j * n)
    for i in range(n):
        ip = (i + 1) % n
        zz = (1 - 2 * ((x >> i) & 1)) * (1 - 2 * ((x >> ip) & 1))
        diag += 0.5 * j * delta * zz
        src = x[zz < 0]
        m[src ^ ((1 << i) | (1 << ip)), src] += j
    m[x, x] += diag
    return m


def block_matrix(params: ModelParams, r: int, k: int) -> np.ndarray:
    """Hamiltonian projected onto the momentum basis of sector (r, k).

    Complex Hermitian, one row/column per admissible orbit ordered by
    representative; an empty sector yields a 0x0 matrix.  Matrix elements
    are accumulated from H applied to each column orbit's anchor state:
    a target state T^j(anchor_a) of row orbit a contributes
    amplitude * omega_k^{-j} * sqrt(d_b / d_a).
    """
    basis = momentum_basis(params.n_sites, r, k)
    return _block_from_basis(params, basis)


def _block_from_basis(params: ModelParams, basis: MomentumBasis) -> np.ndarray:
    n = params.n_sites
    size = basis.size
    m = np.zeros((size, size), dtype=complex)
    if size == 0:
        return m
    location: dict[int, tuple[int, int]] = {}
    for idx, orb in enumerate(basis.orbits):
        cur = orb.anchor().bits
        for j in range(orb.period):
            location[cur] = (idx, j)
            cur = shift_bits(cur, n)
    periods = [o.period for o in basis.orbits]
    phase = np.exp(-2j * np.pi * basis.k * np.arange(n) / n)
    for b, orb in enumerate(basis.orbits):
        for target, amp in apply_hamiltonian(params, orb.anchor()):
            hit = location.get(target.bits)
            if hit is None:
                continue  # target orbit not admissible at this k
            a, j = hit
            m[a, b] += amp * phase[j] * np.sqrt(periods[b] / periods[a])
    return m
