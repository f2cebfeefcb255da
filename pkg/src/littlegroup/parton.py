"""Scaling laws behind the free-parton appearance of a fast bound state.

A boost of rapidity eta dilates the internal oscillation period by
exp(eta) while the interaction time with a counter-propagating probe,
which runs along the negative light-cone axis, contracts by exp(-eta).
Their ratio exp(-2 eta) measures how much of one internal cycle the
probe can see; once it is tiny, the constituents respond incoherently.

The constituent-multiplication effect has no closed form here; its
measurable proxy is the unbounded growth of the momentum spread along
the positive light-cone axis (see momentum_space).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Default beam-particle mass in GeV (proton).
DEFAULT_PROTON_MASS_GEV = 0.938


@dataclass(frozen=True)
class BeamSpec:
    """Beam energy and particle mass in GeV, natural units."""

    energy: float
    mass: float = DEFAULT_PROTON_MASS_GEV

    def __post_init__(self):
        if not self.mass > 0:
            raise ValueError("mass must be positive")
        if self.energy < self.mass:
            raise ValueError("beam energy cannot be below the particle mass")


def rapidity_from_beam(beam: BeamSpec) -> float:
    """Boost rapidity arccosh(E/m), i.e. atanh(v/c) for the beam velocity."""
    return math.acosh(beam.energy / beam.mass)


def period_dilation(eta: float) -> float:
    """Internal oscillation period grows like exp(eta)."""
    return math.exp(eta)


def interaction_time_contraction(eta: float) -> float:
    """External interaction time shrinks like exp(-eta)."""
    return math.exp(-eta)


def coherence_ratio(eta: float) -> float:
    """Interaction time over oscillation period: exp(-2 eta).

    Equal to 1 only at rest; strictly decreasing in eta.
    """
    return math.exp(-2.0 * eta)
