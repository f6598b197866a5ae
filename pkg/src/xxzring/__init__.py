"""Exact spectra and nearest-neighbor thermal entanglement of the XXZ ring.

Everything flows from the eigenvalues: the partition function determines the
internal energy and the zz correlator, those two determine the two-site
reduced state, and that state's concurrence and linear entropy follow in
closed form.  A brute-force density-matrix path verifies every step.
"""

from .basis import (
    MomentumBasis,
    Orbit,
    SpinState,
    cyclic_shift,
    enumerate_sector,
    momentum_basis,
    orbit_of,
    sector_dimension,
)
from .engines import (
    ExtremumResult,
    SweepRow,
    ThresholdResult,
    evaluate_row,
    find_extremum,
    find_threshold,
    measure_function,
    numeric_ground_state,
    rows_to_csv,
    sweep_rows,
)
from .hamiltonian import (
    CapacityError,
    ModelParams,
    apply_hamiltonian,
    block_matrix,
    full_matrix,
)
from .oracle import (
    ground_state_mixture,
    gzz_trace,
    purity_linear_entropy,
    reduce_to_pair,
    thermal_state,
    wootters_concurrence,
)
from .pairstate import (
    PairState,
    closed_n4_ground,
    concurrence_ground,
    concurrence_thermal,
    linear_entropy_ground,
    linear_entropy_thermal,
    xstate_density,
)
from .spectrum import (
    GroundState,
    Level,
    Spectrum,
    eig_self_adjoint,
    ground_state_n4,
    ground_state_n5,
    spectrum_closed_n5,
    spectrum_numeric,
)
from .thermo import (
    ThermoPoint,
    gzz,
    gzz_fd,
    internal_energy,
    log_partition,
    thermo_point,
)

__version__ = "0.1.0"
