"""Bitmask basis for a periodic ring of spin-1/2 sites.

A basis state is an integer bit pattern: bit i holds the spin at site i
(1 = reversed/down, sigma_z = -1; 0 = up, sigma_z = +1).  Printing a state
as a binary numeral therefore reads off the ket left to right, e.g. the
five-site state |10000> is the integer 16.

The cyclic shift moves every site's content one position around the ring.
Grouping a fixed-magnetization sector into shift orbits and Fourier
transforming along each orbit yields orthonormal momentum vectors that
block-diagonalize any translation-invariant Hamiltonian.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

MAX_SITES = 24


@dataclass(frozen=True)
class SpinState:
    """Configuration of an n_sites ring encoded as an integer bit pattern."""

    bits: int
    n_sites: int

    def __post_init__(self):
        if not 2 <= self.n_sites <= MAX_SITES:
            raise ValueError(f"n_sites must be in [2, {MAX_SITES}], got {self.n_sites}")
        if not 0 <= self.bits < (1 << self.n_sites):
            raise ValueError(f"bits {self.bits} out of range for {self.n_sites} sites")

    @property
    def reversed_spins(self) -> int:
        """Number of down spins (popcount of the bit pattern)."""
        return self.bits.bit_count()

    def __str__(self):
        return format(self.bits, f"0{self.n_sites}b")


def shift_bits(bits: int, n_sites: int) -> int:
    """Cyclic shift on the raw bit pattern: site i content moves to site i-1."""
    return (bits >> 1) | ((bits & 1) << (n_sites - 1))


def cyclic_shift(state: SpinState) -> SpinState:
    """Move every site's content one position around the ring.

    In ket notation |m_1 ... m_N>  ->  |m_N m_1 ... m_{N-1}>; applying the
    shift n_sites times is the identity.
    """
    return SpinState(shift_bits(state.bits, state.n_sites), state.n_sites)


def enumerate_sector(n_sites: int, r: int) -> list[SpinState]:
    """All states with exactly r reversed spins, in ascending bit order."""
    if not 0 <= r <= n_sites:
        raise ValueError(f"reversed-spin count {r} out of range for {n_sites} sites")
    patterns = sorted(
        sum(1 << p for p in positions) for positions in combinations(range(n_sites), r)
    )
    return [SpinState(bits, n_sites) for bits in patterns]


@dataclass(frozen=True)
class Orbit:
    """Shift orbit of a basis state.

    representative is the smallest bit pattern in the orbit; period is the
    smallest d > 0 with shift^d = identity on the orbit (d divides n_sites).
    """

    representative: SpinState
    period: int

    @property
    def n_sites(self) -> int:
        return self.representative.n_sites

    def members(self) -> list[SpinState]:
        """Orbit states in shift order starting from the representative."""
        n = self.n_sites
        out = [self.representative]
        cur = self.representative.bits
        for _ in range(self.period - 1):
            cur = shift_bits(cur, n)
            out.append(SpinState(cur, n))
        return out

    def anchor(self) -> SpinState:
        """Largest bit pattern in the orbit.

        This is the orbit element conventionally written first (reversed
        spins at the leading sites, e.g. |11000>); momentum vectors start
        their phase expansion here so that projected Hamiltonian blocks come
        out in the standard form.
        """
        n = self.n_sites
        best = cur = self.representative.bits
        for _ in range(self.period - 1):
            cur = shift_bits(cur, n)
            best = max(best, cur)
        return SpinState(best, n)


def orbit_of(state: SpinState) -> Orbit:
    """Representative (minimum over shifts) and period of the state's orbit."""
    n = state.n_sites
    rep = cur = state.bits
    period = n
    for d in range(1, n + 1):
        cur = shift_bits(cur, n)
        rep = min(rep, cur)
        if cur == state.bits:
            period = d
            break
    return Orbit(SpinState(rep, n), period)


@dataclass(frozen=True)
class MomentumBasis:
    """Orthonormal momentum vectors of the (r, k) sector.

    One vector per admissible orbit: the orbit of period d enters sector k
    iff k*d = 0 (mod n_sites).  The vector places coefficient
    omega_k^j / sqrt(d) on the j-th shift of the orbit anchor, with
    omega_k = exp(2 pi i k / n_sites); every vector is an eigenvector of the
    cyclic shift with eigenvalue omega_k^{-1}.
    """

    n_sites: int
    r: int
    k: int
    orbits: tuple[Orbit, ...]

    @property
    def size(self) -> int:
        return len(self.orbits)

    @property
    def weights(self) -> tuple[float, ...]:
        """Normalization 1/sqrt(period) of each orbit's momentum vector."""
        return tuple(1.0 / np.sqrt(o.period) for o in self.orbits)

    def vector(self, index: int) -> np.ndarray:
        """Momentum vector of orbit `index` expanded in the full 2^N space."""
        orb = self.orbits[index]
        n = self.n_sites
        v = np.zeros(1 << n, dtype=complex)
        cur = orb.anchor().bits
        norm = 1.0 / np.sqrt(orb.period)
        for j in range(orb.period):
            v[cur] = norm * np.exp(2j * np.pi * self.k * j / n)
            cur = shift_bits(cur, n)
        return v

    def vectors(self) -> np.ndarray:
        """All momentum vectors as columns of a (2^N, size) array."""
        if self.size == 0:
            return np.zeros((1 << self.n_sites, 0), dtype=complex)
        return np.column_stack([self.vector(i) for i in range(self.size)])


def momentum_basis(n_sites: int, r: int, k: int) -> MomentumBasis:
    """Admissible orbits of sector r at momentum index k (1 <= k <= n_sites).

    k = n_sites is the zero-momentum sector.  The basis may be empty.
    """
    if not 1 <= k <= n_sites:
        raise ValueError(f"momentum index {k} out of range for {n_sites} sites")
    orbits = []
    seen = set()
    for state in enumerate_sector(n_sites, r):
        if state.bits in seen:
            continue
        orb = orbit_of(state)
        for member in orb.members():
            seen.add(member.bits)
        if (k * orb.period) % n_sites == 0:
            orbits.append(orb)
    orbits.sort(key=lambda o: o.representative.bits)
    return MomentumBasis(n_sites, r, k, tuple(orbits))


def sector_dimension(n_sites: int, r: int) -> int:
    """Dimension C(n_sites, r) of the fixed-magnetization sector."""
    return comb(n_sites, r)
