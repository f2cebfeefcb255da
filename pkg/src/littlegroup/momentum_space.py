"""Momentum-energy wave functions and the numerical Fourier duality.

The momentum-energy wave function of the boosted ground state is the
same squeezed Gaussian as the space-time one: wide along the positive
light-cone diagonal of the (q_z, q_0) plane and narrow across it.  The
momentum light-cone variables are therefore paired exactly like the
space-time ones,

    q_u = (q_z + q_0) / sqrt(2),    q_v = (q_z - q_0) / sqrt(2),

so that q_u is wide whenever u is wide.  With this pairing the closed
form below is, modulus for modulus, the continuous Fourier transform

    phi(q_z, q_0) = (1 / 2 pi) integral psi(z, t) exp(-i (q_z z - q_0 t)) dz dt

which fourier_numeric evaluates by direct trapezoidal quadrature
(vectorized as two dense matrix products, not an FFT) for arbitrary
output grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lorentz_algebra import FourVector
from .oscillator import (
    MOMENTUM_ENERGY,
    SPACE_TIME,
    SQRT2,
    GridSpec,
    OscillatorState,
    ScalarField,
    marginal_variance,
)


@dataclass(frozen=True)
class MomentumPoint:
    """Relative momentum q_z and energy q_0 of the pair."""

    q_z: float
    q_0: float

    @property
    def q_u(self) -> float:
        return (self.q_z + self.q_0) / SQRT2

    @property
    def q_v(self) -> float:
        return (self.q_z - self.q_0) / SQRT2


@dataclass(frozen=True)
class QuarkPairMomenta:
    """Four-momenta of the two constituents."""

    p_a: FourVector
    p_b: FourVector


def pair_momenta(pair: QuarkPairMomenta) -> tuple[FourVector, FourVector]:
    """Total momentum p_a + p_b and separation sqrt(2) (p_a - p_b)."""
    return pair.p_a + pair.p_b, SQRT2 * (pair.p_a - pair.p_b)


def momentum_wavefunction(eta: float, q: MomentumPoint) -> float:
    """Ground-state momentum-energy wave function at rapidity eta.

    (1/pi)^(1/2) exp(-(e^-2eta q_u^2 + e^2eta q_v^2) / 2); isotropic at
    eta = 0, elongated along the q_u axis for eta > 0.
    """
    em, ep = math.exp(-eta), math.exp(eta)
    return (1.0 / math.pi) ** 0.5 * math.exp(
        -0.5 * (em**2 * q.q_u**2 + ep**2 * q.q_v**2))


def sample_momentum_wavefunction(eta: float, grid: GridSpec) -> ScalarField:
    """Closed-form momentum wave function sampled on a (q_z, q_0) grid."""
    qz, q0 = grid.meshgrid()
    qu = (qz + q0) / SQRT2
    qv = (qz - q0) / SQRT2
    em, ep = math.exp(-eta), math.exp(eta)
    values = (1.0 / math.pi) ** 0.5 * np.exp(
        -0.5 * (em**2 * qu**2 + ep**2 * qv**2))
    return ScalarField(grid, values, OscillatorState(0, eta), MOMENTUM_ENERGY)


def fourier_numeric(field: ScalarField, momentum_grid: GridSpec) -> ScalarField:
    """Direct quadrature of the transform kernel exp(-i (q_z z - q_0 t)).

    Returns complex samples on the momentum grid with prefactor 1/(2 pi)
    and measure dz dt.  The tail-guard flag goes false when the input
    window is too narrow for the sampled state.
    """
    if field.representation != SPACE_TIME:
        raise ValueError("fourier_numeric needs a space-time field")
    z = field.grid.z_axis
    t = field.grid.t_axis
    wz, wt = field.grid.trapezoid_weights()
    qz = momentum_grid.z_axis
    q0 = momentum_grid.t_axis
    kernel_z = np.exp(-1j * np.outer(qz, z)) * wz
    kernel_t = np.exp(1j * np.outer(q0, t)) * wt
    values = (kernel_z @ field.values.astype(complex) @ kernel_t.T) / (2.0 * math.pi)
    tail_ok = field.tail_ok
    if field.state is not None:
        tail_ok = tail_ok and field.grid.covers_tails(field.state.eta)
    return ScalarField(momentum_grid, values, field.state, MOMENTUM_ENERGY,
                       tail_ok=tail_ok)


def marginal_sigma(eta: float) -> float:
    """Marginal standard deviation along q_z (equal to the one along z)."""
    return math.sqrt(marginal_variance(eta))


def central_region_mask(grid: GridSpec, eta: float,
                        n_sigmas: float = 4.0) -> np.ndarray:
    """Boolean mask of grid nodes within n_sigmas marginal widths of 0."""
    bound = n_sigmas * marginal_sigma(eta)
    qz, q0 = grid.meshgrid()
    return (np.abs(qz) <= bound) & (np.abs(q0) <= bound)
