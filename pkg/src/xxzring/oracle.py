"""Brute-force verification path, independent of the closed forms.

Everything here works on explicit dense matrices in the full 2^N space:
thermal density matrices from complete eigendecompositions, partial traces
down to a two-site pair, the general spin-flip concurrence of an arbitrary
two-qubit state, purity, and the direct trace evaluation of the zz
correlator.  Complex arithmetic is used throughout so the spin-flip formula
needs no special cases.  Capped at 10 sites (dense 1024x1024).
"""

import numpy as np

from .hamiltonian import CapacityError, ModelParams, full_matrix

ORACLE_MAX_SITES = 10

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


def _eig_thermal(params: ModelParams, beta: float):
    if params.n_sites > ORACLE_MAX_SITES:
        raise CapacityError(
            f"oracle limited to {ORACLE_MAX_SITES} sites, got {params.n_sites}"
        )
    if beta < 0:
        raise ValueError("inverse temperature must be >= 0")
    vals, vecs = np.linalg.eigh(full_matrix(params))
    weights = np.exp(-beta * (vals - vals[0]))
    return vals, vecs, weights


def thermal_state(params: ModelParams, beta: float) -> np.ndarray:
    """Normalized exp(-beta*H) as a dense 2^N density matrix."""
    _, vecs, weights = _eig_thermal(params, beta)
    rho = (vecs * weights) @ vecs.conj().T / weights.sum()
    return rho.astype(complex)


def ground_state_mixture(params: ModelParams, tol: float = 1e-9) -> np.ndarray:
    """Equal-weight mixture over the (near-)degenerate ground manifold.

    This is the zero-temperature limit of the thermal state, built without
    taking beta to infinity.
    """
    vals, vecs, _ = _eig_thermal(params, 0.0)
    ground = vecs[:, vals <= vals[0] + tol]
    return (ground @ ground.conj().T / ground.shape[1]).astype(complex)


def reduce_to_pair(rho: np.ndarray, site_a: int, site_b: int) -> np.ndarray:
    """Partial trace keeping two sites; 4x4 result indexed as 2*bit_a + bit_b."""
    rho = np.asarray(rho)
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if rho.shape != (dim, dim) or (1 << n) != dim:
        raise ValueError(f"density matrix shape {rho.shape} is not (2^n, 2^n)")
    if site_a == site_b or not (0 <= site_a < n and 0 <= site_b < n):
        raise ValueError(f"need two distinct sites in [0, {n}), got {site_a}, {site_b}")
    # reshape splits each index big-endian: bit i of the state is axis n-1-i
    grid = rho.reshape([2] * (2 * n))
    grid = np.moveaxis(
        grid,
        [n - 1 - site_a, n - 1 - site_b, 2 * n - 1 - site_a, 2 * n - 1 - site_b],
        [0, 1, n, n + 1],
    )
    rest = 1 << (n - 2)
    return np.einsum("irjr->ij", grid.reshape(4, rest, 4, rest))


def _check_density(rho: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if np.abs(rho - rho.conj().T).max() > tol:
        raise ValueError("density matrix is not self-adjoint")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError(f"density matrix trace {np.trace(rho)} is not 1")
    if np.linalg.eigvalsh(rho).min() < -1e-9:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def wootters_concurrence(rho4: np.ndarray) -> float:
    """Concurrence of an arbitrary two-qubit density matrix.

    max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
    eigenvalues of rho * (sy x sy) * conj(rho) * (sy x sy).
    """
    rho = _check_density(rho4)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {rho.shape}")
    product = rho @ _YY @ rho.conj() @ _YY
    eigs = np.linalg.eigvals(product).real
    if eigs.min() < -1e-9:
        raise ValueError(f"spin-flip product eigenvalue {eigs.min():.3e} below -1e-9")
    roots = np.sort(np.sqrt(np.clip(eigs, 0.0, None)))[::-1]
    return max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))


def purity_linear_entropy(rho: np.ndarray) -> float:
    """Mixedness 1 - Tr(rho^2), via the squared Frobenius norm."""
    rho = _check_density(rho)
    return float(1.0 - (np.abs(rho) ** 2).sum())


def gzz_trace(params: ModelParams, beta: float, bond: int = 0) -> float:
    """<sz.sz> on one ring bond, evaluated as Tr[exp(-beta*H) sz.sz] / Z.

    Translation invariance makes the result bond-independent; the bond
    argument exists to test exactly that.
    """
    n = params.n_sites
    if not 0 <= bond < n:
        raise ValueError(f"bond {bond} out of range for {n} sites")
    vals, vecs, weights = _eig_thermal(params, beta)
    x = np.arange(1 << n)
    zz = (1 - 2 * ((x >> bond) & 1)) * (1 - 2 * ((x >> ((bond + 1) % n)) & 1))
    expectation = np.einsum("ij,i,ij->j", vecs.conj(), zz.astype(float), vecs).real
    return float((weights * expectation).sum() / weights.sum())
