"""Covariant harmonic-oscillator wave functions and their boost squeeze.

The two-body bound state is reduced to the longitudinal separation z and
the timelike separation t; the transverse coordinates are unaffected by a
z boost and enter only through degeneracy counting.  There are no
quantum excitations of the t coordinate: the timelike factor is frozen
to the ground Gaussian, so a state is labelled by the z excitation n and
the boost rapidity eta alone.

A boost acts on the light-cone coordinates u = (z + t)/sqrt(2) and
v = (z - t)/sqrt(2) as the area-preserving squeeze u -> exp(eta) u,
v -> exp(-eta) v, which turns the circular rest-frame distribution into
an ellipse elongated along the positive u axis.

Grid-based operations (normalization, overlaps, the finite-difference
check of the oscillator equation) use uniform trapezoidal quadrature,
which is spectrally accurate for these Gaussian-weighted integrands once
the window covers the tails; the default window of half-width
6 exp(|eta|) keeps the leftover tail mass below 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .lorentz_algebra import FourVector

SQRT2 = math.sqrt(2.0)

SPACE_TIME = "space-time"
MOMENTUM_ENERGY = "momentum-energy"

MAX_EXCITATION = 30
TAIL_HALF_WIDTH_FACTOR = 6.0


@dataclass(frozen=True)
class OscillatorState:
    """Longitudinal excitation n viewed at boost rapidity eta."""

    n: int
    eta: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise ValueError("excitation number must be a nonnegative integer")
        if not math.isfinite(self.eta):
            raise ValueError("boost rapidity must be finite")


@dataclass(frozen=True)
class LightConePoint:
    u: float
    v: float


@dataclass(frozen=True)
class QuarkPairCoordinates:
    """Space-time positions of the two constituents."""

    x_a: FourVector
    x_b: FourVector


@dataclass(frozen=True)
class GridSpec:
    """Uniform rectangular sampling window.

    The axis names follow the space-time representation (z, t); for
    momentum-energy fields the same bounds are read as (q_z, q_0).
    """

    z_min: float
    z_max: float
    t_min: float
    t_max: float
    n_z: int
    n_t: int

    def __post_init__(self):
        if not (self.z_min < self.z_max and self.t_min < self.t_max):
            raise ValueError("grid bounds must be ordered")
        if self.n_z < 16 or self.n_t < 16:
            raise ValueError("grid needs at least 16 samples per axis")

    @classmethod
    def for_rapidity(cls, eta: float, n_points: int = 512) -> "GridSpec":
        """Symmetric window of half-width 6 exp(|eta|) per axis."""
        half = TAIL_HALF_WIDTH_FACTOR * math.exp(abs(eta))
        return cls(-half, half, -half, half, n_points, n_points)

    @property
    def z_axis(self) -> np.ndarray:
        return np.linspace(self.z_min, self.z_max, self.n_z)

    @property
    def t_axis(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.n_t)

    @property
    def dz(self) -> float:
        return (self.z_max - self.z_min) / (self.n_z - 1)

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n_t - 1)

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.z_axis, self.t_axis, indexing="ij")

    def trapezoid_weights(self) -> tuple[np.ndarray, np.ndarray]:
        wz = np.full(self.n_z, self.dz)
        wz[0] *= 0.5
        wz[-1] *= 0.5
        wt = np.full(self.n_t, self.dt)
        wt[0] *= 0.5
        wt[-1] *= 0.5
        return wz, wt

    def covers_tails(self, eta: float) -> bool:
        """True if all four bounds reach the 6 exp(|eta|) tail guard."""
        need = TAIL_HALF_WIDTH_FACTOR * math.exp(abs(eta)) - 1e-9
        return (-self.z_min >= need and self.z_max >= need
                and -self.t_min >= need and self.t_max >= need)


@dataclass(frozen=True)
class ScalarField:
    """Wave-function samples on a grid, with provenance.

    values has shape (n_z, n_t); real for space-time fields, complex for
    momentum-energy ones.  tail_ok records whether the sampling window
    satisfied the tail guard of the operation that produced the field.
    """

    grid: GridSpec
    values: np.ndarray = field(repr=False)
    state: Optional[OscillatorState]
    representation: str
    tail_ok: bool = True

    def __post_init__(self):
        if self.values.shape != (self.grid.n_z, self.grid.n_t):
            raise ValueError("field values must have shape (n_z, n_t)")
        if self.representation not in (SPACE_TIME, MOMENTUM_ENERGY):
            raise ValueError(f"unknown representation {self.representation!r}")


@dataclass(frozen=True)
class Quadrature:
    """Integral value plus the tail-guard flag of the window used."""

    value: float
    tail_ok: bool = True

    def __float__(self) -> float:
        return self.value


def relative_coordinates(pair: QuarkPairCoordinates
                         ) -> tuple[FourVector, FourVector]:
    """Center coordinate (x_a + x_b)/2 and separation (x_a - x_b)/(2 sqrt 2)."""
    center = 0.5 * (pair.x_a + pair.x_b)
    separation = (1.0 / (2.0 * SQRT2)) * (pair.x_a - pair.x_b)
    return center, separation


def hermite(n: int, x) -> np.ndarray | float:
    """Physicists' Hermite polynomial H_n by the two-term recurrence.

    n is capped at 30 to guard against coefficient overflow.
    """
    if not isinstance(n, (int, np.integer)) or n < 0 or n > MAX_EXCITATION:
        raise ValueError(f"hermite order must be an integer in [0, {MAX_EXCITATION}]")
    arr = np.asarray(x, dtype=float)
    h_prev = np.ones_like(arr)
    if n == 0:
        return h_prev if arr.ndim else float(h_prev)
    h = 2.0 * arr
    for k in range(1, n):
        h_prev, h = h, 2.0 * arr * h - 2.0 * k * h_prev
    return h if arr.ndim else float(h)


def lightcone(z, t) -> LightConePoint:
    """Map (z, t) to light-cone coordinates u = (z+t)/sqrt2, v = (z-t)/sqrt2."""
    return LightConePoint((z + t) / SQRT2, (z - t) / SQRT2)


def lightcone_inverse(p: LightConePoint) -> tuple[float, float]:
    return (p.u + p.v) / SQRT2, (p.u - p.v) / SQRT2


def boost_lightcone(eta: float, p: LightConePoint) -> LightConePoint:
    """Squeeze u -> e^eta u, v -> e^-eta v; the product uv is invariant."""
    return LightConePoint(math.exp(eta) * p.u, math.exp(-eta) * p.v)


def _norm_constant(n: int) -> float:
    return (1.0 / (math.pi * math.factorial(n) * 2.0**n)) ** 0.5


def boosted_wavefunction(state: OscillatorState, z, t) -> np.ndarray | float:
    """Wave function of excitation n seen at rapidity eta.

    Evaluates

        (1 / (pi n! 2^n))^(1/2)
          * H_n((e^-eta u + e^eta v) / sqrt 2)
          * exp(-(e^-2eta u^2 + e^2eta v^2) / 2)

    which is the rest-frame wave function composed with the inverse
    light-cone squeeze.  Accepts scalars or broadcastable arrays.
    """
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    u = (z + t) / SQRT2
    v = (z - t) / SQRT2
    em, ep = math.exp(-state.eta), math.exp(state.eta)
    arg = (em * u + ep * v) / SQRT2
    gauss = np.exp(-0.5 * (em**2 * u**2 + ep**2 * v**2))
    out = _norm_constant(state.n) * hermite(state.n, arg) * gauss
    return out if out.ndim else float(out)


def rest_wavefunction(n: int, z, t) -> np.ndarray | float:
    """Rest-frame wave function; alias for boosted_wavefunction at eta = 0."""
    return boosted_wavefunction(OscillatorState(n, 0.0), z, t)


def sample_wavefunction(state: OscillatorState, grid: GridSpec) -> ScalarField:
    """Evaluate the boosted wave function on the grid as a ScalarField."""
    zz, tt = grid.meshgrid()
    values = boosted_wavefunction(state, zz, tt)
    return ScalarField(grid, values, state, SPACE_TIME,
                       tail_ok=grid.covers_tails(state.eta))


def _integrate(values: np.ndarray, grid: GridSpec) -> float:
    wz, wt = grid.trapezoid_weights()
    return float(np.sum(values * wz[:, None] * wt[None, :]))


def power_integral(field_: ScalarField) -> float:
    """Trapezoidal integral of |values|^2 over the field's window."""
    return _integrate(np.abs(field_.values) ** 2, field_.grid)


def normalization(state: OscillatorState, grid: GridSpec | None = None
                  ) -> Quadrature:
    """Quadrature of the squared wave function; the contract is 1.

    The result carries a warning flag when the window misses the
    6 exp(|eta|) tail guard and the integral can no longer be trusted
    at the 1e-10 level.
    """
    if grid is None:
        grid = GridSpec.for_rapidity(state.eta)
    f = sample_wavefunction(state, grid)
    return Quadrature(power_integral(f), f.tail_ok)


def overlap(state_a: OscillatorState, state_b: OscillatorState,
            grid: GridSpec) -> float:
    """Trapezoidal overlap integral of two (real) wave functions."""
    zz, tt = grid.meshgrid()
    prod = (boosted_wavefunction(state_a, zz, tt)
            * boosted_wavefunction(state_b, zz, tt))
    return _integrate(prod, grid)


def lightcone_widths(field_: ScalarField) -> tuple[float, float]:
    """Standard deviations along the light-cone diagonals under |values|^2.

    Applies equally to both representations: momentum-energy fields use
    the same diagonal map with (q_z, q_0) in place of (z, t).
    """
    zz, tt = field_.grid.meshgrid()
    uu = (zz + tt) / SQRT2
    vv = (zz - tt) / SQRT2
    wz, wt = field_.grid.trapezoid_weights()
    weight = np.abs(field_.values) ** 2 * wz[:, None] * wt[None, :]
    mass = float(np.sum(weight))
    sigma_u = math.sqrt(float(np.sum(uu**2 * weight)) / mass)
    sigma_v = math.sqrt(float(np.sum(vv**2 * weight)) / mass)
    return sigma_u, sigma_v


def eigenvalue_check(n: int, grid: GridSpec) -> float:
    """Finite-difference eigenvalue of the invariant oscillator form.

    Applies 0.5 * ((z^2 - t^2) - (d^2/dz^2 - d^2/dt^2)) to the sampled
    rest-frame wave function with second-order central stencils and
    returns the median of the pointwise ratio (operator result / psi)
    over interior points with |psi| > 1e-3.  Under the spacelike-positive
    signature the timelike ground factor contributes -1/2, so the
    expected value is exactly n.
    """
    if grid.dz > 0.05 or grid.dt > 0.05:
        raise ValueError("eigenvalue check needs grid spacing <= 0.05")
    f = sample_wavefunction(OscillatorState(n, 0.0), grid)
    psi = f.values
    zz, tt = grid.meshgrid()
    core = psi[1:-1, 1:-1]
    d2z = (psi[2:, 1:-1] - 2.0 * core + psi[:-2, 1:-1]) / grid.dz**2
    d2t = (psi[1:-1, 2:] - 2.0 * core + psi[1:-1, :-2]) / grid.dt**2
    form = zz[1:-1, 1:-1] ** 2 - tt[1:-1, 1:-1] ** 2
    operator = 0.5 * (form * core - (d2z - d2t))
    mask = np.abs(core) > 1e-3
    if int(mask.sum()) < 100:
        raise ValueError("too few points with |psi| > 1e-3 for a stable ratio")
    return float(np.median(operator[mask] / core[mask]))


def marginal_variance(eta: float) -> float:
    """Variance of z under the squared ground-state wave function.

    cosh(2 eta) / 2: the longitudinal quark distribution widens without
    bound as the bound state is boosted.
    """
    return math.cosh(2.0 * eta) / 2.0


def degeneracy(total: int) -> int:
    """Number of 3-D excitation triples summing to the given level."""
    if not isinstance(total, (int, np.integer)) or total < 0:
        raise ValueError("level must be a nonnegative integer")
    return (total + 1) * (total + 2) // 2
