"""Evaluation engines and search routines behind the command-line tools.

A "row" is the bundle of observables at one (ring size, anisotropy,
temperature) point.  Three engines produce rows:

  * closed  -- the analytic route: five-site closed-form spectrum (any
               temperature) or the four-site ground formulas (zero
               temperature only).
  * numeric -- dense diagonalization plus finite differences of ln Z for
               the zz correlator; any supported ring size.
  * oracle  -- brute force: thermal density matrix, partial trace, general
               spin-flip concurrence and purity (up to 10 sites).

Zero temperature is always routed to ground-state formulas (or the ground
manifold mixture), never through a large inverse temperature.  For zero
temperature the ln_z column holds ln(ground multiplicity), the
beta-independent residue of ln Z + beta*E_gs.
"""

from dataclasses import dataclass

import numpy as np

from . import oracle as oracle_mod
from .hamiltonian import ModelParams
from .pairstate import (
    PairState,
    closed_n4_ground,
    concurrence_ground,
    concurrence_thermal,
    linear_entropy_ground,
    linear_entropy_thermal,
)
from .spectrum import (
    GroundState,
    Spectrum,
    ground_state_n4,
    ground_state_n5,
    spectrum_closed_n5,
    spectrum_numeric,
)
from .thermo import gzz, gzz_fd, internal_energy, log_partition

ENGINES = ("closed", "numeric", "oracle")
GOLDEN = (1 + np.sqrt(5)) / 2
DEFAULT_PRESCAN_STEP = 0.01
DEFAULT_REFINE_TOL = 1e-4
_GROUND_FD_STEP = 1e-5
_NUMERIC_FULL_MAX = 12


@dataclass(frozen=True)
class SweepRow:
    """Observables at one parameter point, as written to sweep CSV output."""

    n: int
    j: float
    delta: float
    t: float
    ln_z: float
    u: float
    gzz: float
    concurrence: float
    linear_entropy: float
    engine: str


CSV_HEADER = "n,j,delta,t,ln_z,u,gzz,concurrence,linear_entropy,engine"


def rows_to_csv(rows) -> str:
    """Serialize rows losslessly (17 significant digits per float)."""
    lines = [CSV_HEADER]
    for r in rows:
        floats = (r.j, r.delta, r.t, r.ln_z, r.u, r.gzz, r.concurrence, r.linear_entropy)
        lines.append(f"{r.n}," + ",".join(format(x, ".17g") for x in floats) + f",{r.engine}")
    return "\n".join(lines) + "\n"


def _numeric_spectrum(params: ModelParams) -> Spectrum:
    via = "full" if params.n_sites <= _NUMERIC_FULL_MAX else "sectors"
    return spectrum_numeric(params, via=via)


def numeric_ground_state(n_sites, anisotropy, exchange=1.0, step=_GROUND_FD_STEP) -> GroundState:
    """Ground energy from dense diagonalization, derivative by differencing."""

    def e_min(delta):
        return _numeric_spectrum(ModelParams(n_sites, delta, exchange)).min_energy

    energy = e_min(anisotropy)
    if anisotropy >= step:
        derivative = (e_min(anisotropy + step) - e_min(anisotropy - step)) / (2 * step)
    else:
        derivative = (
            -3 * energy + 4 * e_min(anisotropy + step) - e_min(anisotropy + 2 * step)
        ) / (2 * step)
    return GroundState(energy, derivative)


def _ground_row(n, j, delta, engine, gs: GroundState, ln_mult: float) -> SweepRow:
    gzz_value = 2.0 * gs.d_energy_d_delta / (n * j)
    if engine == "closed" and n == 4:
        concurrence, linear_entropy = closed_n4_ground(delta)
    else:
        concurrence = concurrence_ground(gs.energy / j, gs.d_energy_d_delta / j, delta, n)
        linear_entropy = linear_entropy_ground(
            gs.energy / j, gs.d_energy_d_delta / j, delta, n
        )
    return SweepRow(n, j, delta, 0.0, ln_mult, gs.energy, gzz_value, concurrence,
                    linear_entropy, engine)


def evaluate_row(
    n: int,
    delta: float,
    t: float,
    engine: str = "closed",
    exchange: float = 1.0,
    bond: int = 0,
) -> SweepRow:
    """Observables at one (n, delta, t) point through the chosen engine."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    if t < 0:
        raise ValueError("temperature must be >= 0")
    j = exchange

    if engine == "closed":
        if n == 5:
            if t == 0:
                gs = ground_state_n5(delta, j)
                mult = spectrum_closed_n5(delta, j).ground_multiplicity()
                return _ground_row(n, j, delta, engine, gs, float(np.log(mult)))
            spec = spectrum_closed_n5(delta, j)
            beta = 1.0 / t
            u = internal_energy(spec, beta)
            gzz_value = gzz(spec, beta, n, j)
            return SweepRow(
                n, j, delta, t, log_partition(spec, beta), u, gzz_value,
                concurrence_thermal(u / j, gzz_value, delta, n),
                linear_entropy_thermal(u / j, gzz_value, delta, n), engine,
            )
        if n == 4 and t == 0:
            gs = ground_state_n4(delta, j)
            return _ground_row(n, j, delta, engine, gs, 0.0)
        raise ValueError(
            "closed engine supports n=5 (any temperature) and n=4 (zero temperature only)"
        )

    params = ModelParams(n, delta, j)
    if engine == "numeric":
        if t == 0:
            gs = numeric_ground_state(n, delta, j)
            mult = _numeric_spectrum(params).ground_multiplicity()
            return _ground_row(n, j, delta, engine, gs, float(np.log(mult)))
        spec = _numeric_spectrum(params)
        beta = 1.0 / t
        u = internal_energy(spec, beta)
        gzz_value = gzz_fd(params, beta)
        return SweepRow(
            n, j, delta, t, log_partition(spec, beta), u, gzz_value,
            concurrence_thermal(u / j, gzz_value, delta, n),
            linear_entropy_thermal(u / j, gzz_value, delta, n), engine,
        )

    # oracle engine
    site_b = (bond + 1) % n
    spec = _numeric_spectrum(params)
    if t == 0:
        rho = oracle_mod.ground_state_mixture(params)
        pair = oracle_mod.reduce_to_pair(rho, bond, site_b)
        zz_diag = np.array([1.0, -1.0, -1.0, 1.0])
        gzz_value = float((np.diag(pair).real * zz_diag).sum())
        mult = spec.ground_multiplicity()
        return SweepRow(
            n, j, delta, 0.0, float(np.log(mult)), spec.min_energy, gzz_value,
            oracle_mod.wootters_concurrence(pair),
            oracle_mod.purity_linear_entropy(pair), engine,
        )
    beta = 1.0 / t
    pair = oracle_mod.reduce_to_pair(oracle_mod.thermal_state(params, beta), bond, site_b)
    return SweepRow(
        n, j, delta, t, log_partition(spec, beta), internal_energy(spec, beta),
        oracle_mod.gzz_trace(params, beta, bond),
        oracle_mod.wootters_concurrence(pair),
        oracle_mod.purity_linear_entropy(pair), engine,
    )


def sweep_rows(n, deltas, temps, engine="closed", exchange=1.0, bond=0) -> list[SweepRow]:
    """Rows for the (temps x deltas) grid, ordered by (t, delta)."""
    return [
        evaluate_row(n, float(d), float(t), engine, exchange, bond)
        for t in sorted(temps)
        for d in sorted(deltas)
    ]


def measure_function(n, t, measure, engine="closed", exchange=1.0, bond=0):
    """Callable delta -> measure value at fixed temperature."""
    if measure not in ("concurrence", "linear_entropy"):
        raise ValueError(f"unknown measure {measure!r}")

    def f(delta):
        row = evaluate_row(n, float(delta), t, engine, exchange, bond)
        return getattr(row, measure)

    return f


def golden_section_min(f, lo: float, hi: float, tol: float) -> float:
    """Location of the minimum of a unimodal function on [lo, hi]."""
    a, b = float(lo), float(hi)
    c = b - (b - a) / GOLDEN
    d = a + (b - a) / GOLDEN
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) / GOLDEN
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) / GOLDEN
            fd = f(d)
    return (a + b) / 2


@dataclass(frozen=True)
class ExtremumResult:
    """Located extremum with the bracketing evidence of the grid pre-scan."""

    delta_star: float
    value: float
    bracket: tuple[float, float]
    boundary: bool
    neighbors: tuple[tuple[float, float], ...]


def find_extremum(
    f,
    lo: float,
    hi: float,
    sense: str = "max",
    prescan_step: float = DEFAULT_PRESCAN_STEP,
    tol: float = DEFAULT_REFINE_TOL,
) -> ExtremumResult:
    """Grid pre-scan followed by golden-section refinement.

    The pre-scan locates the best grid point; refinement runs only on the
    two adjacent grid cells (the measures are not assumed unimodal over the
    whole interval).  A best point on the interval boundary is flagged
    rather than refined.
    """
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")
    if not hi > lo:
        raise ValueError("need hi > lo")
    grid = np.arange(lo, hi + prescan_step / 2, prescan_step)
    values = np.array([f(x) for x in grid])
    best = int(np.argmax(values) if sense == "max" else np.argmin(values))
    neighbors = tuple(
        (float(grid[i]), float(values[i]))
        for i in range(max(0, best - 1), min(len(grid), best + 2))
    )
    if best in (0, len(grid) - 1):
        return ExtremumResult(
            float(grid[best]), float(values[best]),
            (float(grid[max(0, best - 1)]), float(grid[min(len(grid) - 1, best + 1)])),
            True, neighbors,
        )
    a, b = float(grid[best - 1]), float(grid[best + 1])
    target = (lambda x: -f(x)) if sense == "max" else f
    x_star = golden_section_min(target, a, b, tol)
    return ExtremumResult(float(x_star), float(f(x_star)), (a, b), False, neighbors)


@dataclass(frozen=True)
class ThresholdResult:
    """Boundary of the entangled region, or why none was found."""

    threshold: float | None
    status: str  # found | already-positive | not-found
    bracket: tuple[float, float] | None


def find_threshold(
    concurrence_fn,
    lo: float,
    hi: float,
    prescan_step: float = DEFAULT_PRESCAN_STEP,
    tol: float = DEFAULT_REFINE_TOL,
) -> ThresholdResult:
    """Smallest anisotropy in [lo, hi] where the concurrence turns positive.

    A grid pre-scan finds the first positive point (the entangled region may
    be an interior window); bisection then refines the lower edge.  Reports
    already-positive when the concurrence is nonzero at lo, and not-found
    when it vanishes on the whole grid.
    """
    grid = np.arange(lo, hi + prescan_step / 2, prescan_step)
    values = np.array([concurrence_fn(x) for x in grid])
    if values[0] > 0:
        return ThresholdResult(None, "already-positive", None)
    positive = np.nonzero(values > 0)[0]
    if len(positive) == 0:
        return ThresholdResult(None, "not-found", None)
    a, b = float(grid[positive[0] - 1]), float(grid[positive[0]])
    bracket = (a, b)
    while b - a > tol:
        mid = (a + b) / 2
        if concurrence_fn(mid) > 0:
            b = mid
        else:
            a = mid
    return ThresholdResult((a + b) / 2, "found", bracket)
