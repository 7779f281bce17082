"""Quantum-number bookkeeping and effective (generally irrational) parameters.

Half-integers are stored as doubled integers (two_j) so channel arithmetic is
exact; derived quantities (gamma, l_eff, n_eff) are ordinary floats.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import config
from .errors import BrokenRegime, InvalidState


class Model(enum.Enum):
    DIRAC = "dirac"
    KLEIN_GORDON = "kg"


@dataclass(frozen=True)
class Channel:
    """A radial spin-orbit sector (j, omega_tilde) with derived l and K.

    l = j + omega_tilde/2 and K = omega_tilde * (j + 1/2); omega_tilde = -1
    labels l = j - 1/2 and omega_tilde = +1 labels l = j + 1/2.
    """

    two_j: int
    omega_tilde: int
    l: int
    K: int

    def __post_init__(self):
        if self.two_j < 1 or self.two_j % 2 == 0:
            raise ValueError(f"two_j must be a positive odd integer, got {self.two_j}")
        if self.omega_tilde not in (-1, 1):
            raise ValueError(f"omega_tilde must be +-1, got {self.omega_tilde}")
        if self.l != (self.two_j + self.omega_tilde) // 2 or self.l < 0:
            raise ValueError("inconsistent l")
        if self.K != self.omega_tilde * (self.two_j + 1) // 2:
            raise ValueError("inconsistent K")

    @property
    def j(self) -> float:
        return self.two_j / 2.0


def make_channel(two_j: int, omega_tilde: int) -> Channel:
    """Build a channel from 2j (odd, >= 1) and omega_tilde in {-1, +1}."""
    if two_j < 1 or two_j % 2 == 0:
        raise ValueError(f"two_j must be a positive odd integer, got {two_j}")
    if omega_tilde not in (-1, 1):
        raise ValueError(f"omega_tilde must be +-1, got {omega_tilde}")
    l = (two_j + omega_tilde) // 2
    K = omega_tilde * (two_j + 1) // 2
    return Channel(two_j=two_j, omega_tilde=omega_tilde, l=l, K=K)


def channel_with_l(l: int) -> Channel:
    """Canonical channel whose orbital quantum number is l (used by the
    spin-0 routines, which depend on the channel only through l)."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    if l == 0:
        return make_channel(1, -1)
    return make_channel(2 * l - 1, +1)


@dataclass(frozen=True)
class Couplings:
    """Strengths of the imaginary Coulomb parts: vector -i*a1/r (minimal
    coupling) and scalar -i*a2/r (added to the mass), in units hbar = c = 1."""

    a1: float
    a2: float
    m: float = 1.0

    def __post_init__(self):
        if self.a1 < 0 or self.a2 < 0:
            raise ValueError("coupling strengths must be nonnegative")
        if self.m <= 0:
            raise ValueError("mass must be positive")


@dataclass(frozen=True)
class PrincipalState:
    n: int
    n_r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.n_r < 0:
            raise ValueError(f"n_r must be >= 0, got {self.n_r}")


def make_state(n: int, channel: Channel) -> PrincipalState:
    """Principal state with the standard radial count n_r = n - l - 1."""
    if n < channel.l + 1:
        raise ValueError(f"n={n} requires n >= l+1 = {channel.l + 1}")
    return PrincipalState(n=n, n_r=n - channel.l - 1)


@dataclass(frozen=True)
class EffectiveParams:
    gamma: float
    l_eff: float
    n_eff: float


def gamma(channel: Channel, couplings: Couplings) -> float:
    """Positive root of K^2 + a1^2 - a2^2 governing the r^(gamma-1) behaviour
    at the origin; the negative root would make the wavefunction diverge."""
    radicand = channel.K ** 2 + couplings.a1 ** 2 - couplings.a2 ** 2
    if radicand <= 0.0:
        raise BrokenRegime(radicand)
    return math.sqrt(radicand)


def kg_radicand(l: int, couplings: Couplings) -> float:
    return (l + 0.5) ** 2 + couplings.a1 ** 2 - couplings.a2 ** 2


def effective_params(
    model: Model,
    channel: Channel,
    state: PrincipalState,
    couplings: Couplings,
) -> EffectiveParams:
    """Effective angular momentum and principal quantum number.

    Spin-1/2: l_eff = -1/2 + gamma + omega_tilde/2 and
    n_eff = n_r + l_eff + 1 (identically n - j - 1/2 + gamma).
    Spin-0:   l_eff = -1/2 + sqrt((l+1/2)^2 + a1^2 - a2^2) and
    n_eff = n_r + l_eff + 1.
    """
    if model is Model.DIRAC:
        g = gamma(channel, couplings)
        l_eff = -0.5 + g + channel.omega_tilde / 2.0
    else:
        rad = kg_radicand(channel.l, couplings)
        if rad <= 0.0:
            raise BrokenRegime(rad)
        g = math.sqrt(rad)
        l_eff = -0.5 + g
    n_eff = state.n_r + l_eff + 1.0
    if n_eff <= 0.0:
        raise InvalidState(f"n_eff = {n_eff:.6g} <= 0")
    return EffectiveParams(gamma=g, l_eff=l_eff, n_eff=n_eff)
