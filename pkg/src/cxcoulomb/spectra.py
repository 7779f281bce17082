"""Closed-form energy levels, root filtering and figure-data sweeps.

Every candidate root of the quadratic in E/m is kept only if it satisfies the
quantization condition n_eff * sqrt(E^2 - m^2) = m*a2 + a1*E with the
principal nonnegative square root and strictly positive right-hand side (the
strictness rejects the spurious E = -m root of the equal-coupling case).
The zero-coupling limit is the one exception: it is classified Threshold and
reports the limiting value E/m = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import config
from .errors import BrokenRegime, InvalidState
from .qnum import (
    Channel,
    Couplings,
    EffectiveParams,
    Model,
    PrincipalState,
    channel_with_l,
    effective_params,
    make_channel,
    make_state,
)


class Branch(enum.Enum):
    PLUS = "+"
    MINUS = "-"


class Regime(enum.Enum):
    REGULAR = "Regular"
    FLOWN_AWAY = "FlownAway"
    BROKEN = "Broken"
    THRESHOLD = "Threshold"


@dataclass(frozen=True)
class EnergyLevel:
    ratio: float
    branch: Branch
    valid: bool
    quantization_residual: float


@dataclass(frozen=True)
class RegimeReport:
    regime: Regime
    detail: str = ""


@dataclass
class SeriesData:
    label: str
    abscissa: list[float] = field(default_factory=list)
    ordinate: list[float] = field(default_factory=list)
    gaps: list[int] = field(default_factory=list)


def quantization_residual(
    ratio: float, n_eff: float, couplings: Couplings
) -> tuple[float, bool]:
    """Residual of the quantization condition for E = ratio*m, and whether
    the right-hand side m*a2 + a1*E is strictly positive."""
    m = couplings.m
    E = ratio * m
    rhs = m * couplings.a2 + couplings.a1 * E
    disc = E * E - m * m
    if disc < 0.0:
        return math.inf, rhs > 0.0
    res = abs(n_eff * math.sqrt(disc) - rhs) / m
    return res, rhs > 0.0


def _zero_coupling(couplings: Couplings) -> bool:
    return couplings.a1 == 0.0 and couplings.a2 == 0.0


def energy_general(
    model: Model,
    channel: Channel,
    state: PrincipalState,
    couplings: Couplings,
) -> tuple[list[EnergyLevel], RegimeReport]:
    """Both roots of the closed-form E/m quadratic, validity-filtered."""
    if _zero_coupling(couplings):
        return (
            [EnergyLevel(1.0, Branch.PLUS, True, 0.0)],
            RegimeReport(Regime.THRESHOLD, "zero coupling: limiting value E/m = 1"),
        )
    try:
        eff = effective_params(model, channel, state, couplings)
    except BrokenRegime as exc:
        return [], RegimeReport(Regime.BROKEN, f"radicand {exc.radicand:.6g} <= 0")
    except InvalidState as exc:
        return [], RegimeReport(Regime.FLOWN_AWAY, str(exc))
    a1, a2 = couplings.a1, couplings.a2
    denom = eff.n_eff ** 2 - a1 ** 2
    if abs(denom) < config.FLOWN_AWAY_TOL * max(eff.n_eff ** 2, a1 ** 2):
        return [], RegimeReport(
            Regime.FLOWN_AWAY, f"pole n_eff^2 = a1^2 (n_eff = {eff.n_eff:.6g})"
        )
    center = a1 * a2 / denom
    radicand = center ** 2 + (eff.n_eff ** 2 + a2 ** 2) / denom
    if radicand < 0.0:
        return [], RegimeReport(
            Regime.BROKEN, f"complex energies (root radicand {radicand:.6g})"
        )
    spread = math.sqrt(radicand)
    levels = []
    for branch, ratio in ((Branch.PLUS, center + spread), (Branch.MINUS, center - spread)):
        res, rhs_pos = quantization_residual(ratio, eff.n_eff, couplings)
        valid = (
            ratio * ratio >= 1.0
            and res <= config.QUANTIZATION_TOL
            and rhs_pos
        )
        levels.append(EnergyLevel(ratio, branch, valid, res if math.isfinite(res) else math.inf))
    return levels, RegimeReport(Regime.REGULAR, "")


def energy_case1(channel: Channel, state: PrincipalState, z_alpha: float) -> EnergyLevel:
    """Pure imaginary vector coupling (a2 = 0): the positive branch
    E/m = [1 - (Z alpha)^2 / n_eff^2]^(-1/2)."""
    couplings = Couplings(a1=z_alpha, a2=0.0)
    if z_alpha == 0.0:
        return EnergyLevel(1.0, Branch.PLUS, True, 0.0)
    eff = effective_params(Model.DIRAC, channel, state, couplings)
    if eff.n_eff <= z_alpha:
        raise InvalidState(f"n_eff = {eff.n_eff:.6g} <= z_alpha = {z_alpha:.6g}")
    ratio = 1.0 / math.sqrt(1.0 - (z_alpha / eff.n_eff) ** 2)
    res, _ = quantization_residual(ratio, eff.n_eff, couplings)
    return EnergyLevel(ratio, Branch.PLUS, True, res)


def energy_case1_special(n: int, z_alpha: float) -> EnergyLevel:
    """States with n = j + 1/2: E/m = sqrt(1 + (Z alpha)^2 / n^2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ratio = math.sqrt(1.0 + (z_alpha / n) ** 2)
    return EnergyLevel(ratio, Branch.PLUS, True, 0.0)


def energy_case2(channel: Channel, state: PrincipalState, a2: float) -> list[EnergyLevel]:
    """Pure imaginary scalar coupling (a1 = 0): the symmetric pair
    E/m = +-sqrt(1 + a2^2 / n_eff^2)."""
    couplings = Couplings(a1=0.0, a2=a2)
    if a2 == 0.0:
        return [
            EnergyLevel(1.0, Branch.PLUS, True, 0.0),
            EnergyLevel(-1.0, Branch.MINUS, True, 0.0),
        ]
    eff = effective_params(Model.DIRAC, channel, state, couplings)  # raises BrokenRegime
    mag = math.sqrt(1.0 + (a2 / eff.n_eff) ** 2)
    out = []
    for branch, ratio in ((Branch.PLUS, mag), (Branch.MINUS, -mag)):
        res, _ = quantization_residual(ratio, eff.n_eff, couplings)
        out.append(EnergyLevel(ratio, branch, True, res))
    return out


def energy_case3(n: int, a: float) -> EnergyLevel:
    """Equal couplings a1 = a2 = a (n_eff = n): E/m = 1 + 2a^2/(n^2 - a^2);
    the E = -m root is rejected by the quantization condition."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if abs(n - a) < config.FLOWN_AWAY_TOL * n:
        raise InvalidState(f"flown away at a = n = {n}")
    if a == 0.0:
        return EnergyLevel(1.0, Branch.PLUS, True, 0.0)
    ratio = 1.0 + 2.0 * a * a / (n * n - a * a)
    res, _ = quantization_residual(ratio, float(n), Couplings(a1=a, a2=a))
    return EnergyLevel(ratio, Branch.PLUS, True, res)


class KGCase(enum.Enum):
    A2_ZERO = "a2zero"
    A1_ZERO = "a1zero"
    EQUAL = "equal"


def energy_kg(case: KGCase, l: int, n: int, coupling: float) -> list[EnergyLevel]:
    """Spin-0 closed forms on the three special coupling lines."""
    channel = channel_with_l(l)
    state = make_state(n, channel)
    if case is KGCase.A2_ZERO:
        couplings = Couplings(a1=coupling, a2=0.0)
        if coupling == 0.0:
            return [EnergyLevel(1.0, Branch.PLUS, True, 0.0)]
        eff = effective_params(Model.KLEIN_GORDON, channel, state, couplings)
        ratio = 1.0 / math.sqrt(1.0 - (coupling / eff.n_eff) ** 2)
        res, _ = quantization_residual(ratio, eff.n_eff, couplings)
        return [EnergyLevel(ratio, Branch.PLUS, True, res)]
    if case is KGCase.A1_ZERO:
        couplings = Couplings(a1=0.0, a2=coupling)
        if coupling == 0.0:
            return [
                EnergyLevel(1.0, Branch.PLUS, True, 0.0),
                EnergyLevel(-1.0, Branch.MINUS, True, 0.0),
            ]
        eff = effective_params(Model.KLEIN_GORDON, channel, state, couplings)
        mag = math.sqrt(1.0 + (coupling / eff.n_eff) ** 2)
        out = []
        for branch, ratio in ((Branch.PLUS, mag), (Branch.MINUS, -mag)):
            res, _ = quantization_residual(ratio, eff.n_eff, couplings)
            out.append(EnergyLevel(ratio, branch, True, res))
        return out
    # equal couplings: n_eff = n exactly
    if abs(n - coupling) < config.FLOWN_AWAY_TOL * n:
        raise InvalidState(f"flown away at coupling = n = {n}")
    if coupling == 0.0:
        return [EnergyLevel(1.0, Branch.PLUS, True, 0.0)]
    ratio = 1.0 + 2.0 * coupling ** 2 / (n * n - coupling ** 2)
    res, _ = quantization_residual(ratio, float(n), Couplings(a1=coupling, a2=coupling))
    return [EnergyLevel(ratio, Branch.PLUS, True, res)]


DEFAULT_FIGURE1_N = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50)
DEFAULT_FIGURE2_N = (1, 2, 3, 4, 5, 6)


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    if steps < 2 or hi <= lo:
        raise ValueError("grid must be increasing with at least 2 points")
    step = (hi - lo) / (steps - 1)
    return [lo + k * step for k in range(steps)]


def figure1_data(
    n_list=DEFAULT_FIGURE1_N, z_alpha_grid=None
) -> list[SeriesData]:
    """E/m against Z*alpha for the n = j + 1/2 tower (one series per n)."""
    if z_alpha_grid is None:
        z_alpha_grid = _grid(*config.FIGURE1_GRID)
    out = []
    for n in n_list:
        series = SeriesData(label=f"n={n}", abscissa=list(z_alpha_grid))
        for za in z_alpha_grid:
            series.ordinate.append(energy_case1_special(n, za).ratio)
        out.append(series)
    return out


def figure2_data(n_list=DEFAULT_FIGURE2_N, a_grid=None) -> list[SeriesData]:
    """E/m against the equal coupling a (one series per n), with a recorded
    gap at the flown-away point a = n."""
    if a_grid is None:
        a_grid = _grid(*config.FIGURE2_GRID)
    out = []
    for n in n_list:
        series = SeriesData(label=f"n={n}", abscissa=list(a_grid))
        for idx, a in enumerate(a_grid):
            try:
                series.ordinate.append(energy_case3(n, a).ratio)
            except InvalidState:
                series.ordinate.append(math.nan)
                series.gaps.append(idx)
        out.append(series)
    return out
