"""Verification engine #2: rotated-contour finite differences.

The reduced radial equation is discretized along the ray r = rho*exp(i*theta)
with theta = -sign(B)*pi/4, which turns the oscillatory exp(-q r) of the
analytic solution (q purely imaginary) into genuine decay, so a standard
Dirichlet grid supports the discrete level.  The operator acting on
V(rho) = U(rho e^{i theta}) is

    -e^{-2i theta} d^2/drho^2 + e^{-2i theta} l_eff(l_eff+1)/rho^2
    - e^{-i theta} 2iB/rho,        B = m*a2 + a1*E,

whose bound eigenvalue approximates lambda = E^2 - m^2.

The plain three-point stencil converges at order 2*l_eff + 1 (not 2) when
l_eff is fractional, because U ~ r^(l_eff+1) is not smooth at the origin.  A
diagonal-only correction makes the stencil exact on the three leading
Frobenius components r^nu, r^(nu+1), r^(nu+2) near the origin, restoring
clean second-order convergence while keeping the matrix complex symmetric
tridiagonal.  Energies are extracted by shift-inverted inverse iteration on
the tridiagonal (banded LU), tracking the eigenvalue nearest the running
prediction; the dense QR kernel is used as a cross-check at small sizes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from . import config
from .errors import LostTracking, NotConverged
from .qnum import Channel, Couplings, Model, PrincipalState, effective_params
from .spectra import quantization_residual


@dataclass(frozen=True)
class ContourGrid:
    n_points: int
    rho_max: float
    angle: float

    def __post_init__(self):
        if self.n_points < 100:
            raise ValueError("n_points must be >= 100")
        if self.rho_max <= 0:
            raise ValueError("rho_max must be positive")

    @property
    def spacing(self) -> float:
        return self.rho_max / (self.n_points + 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(1, self.n_points + 1) * self.spacing


@dataclass(frozen=True)
class Tridiagonal:
    """Complex-symmetric tridiagonal matrix (diagonal + one off-diagonal)."""

    diag: np.ndarray
    off: np.ndarray  # length n-1, both sub- and super-diagonal

    @property
    def n(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        a = np.diag(self.diag)
        idx = np.arange(self.n - 1)
        a[idx, idx + 1] = self.off
        a[idx + 1, idx] = self.off
        return a

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.off * v[1:]
        out[1:] += self.off * v[:-1]
        return out


@dataclass(frozen=True)
class SelfConsistentResult:
    energy_ratio: float
    lam: complex
    outer_iterations: int
    grid_error_estimate: float


def default_angle(b_coeff: float) -> float:
    return -math.copysign(math.pi / 4.0, b_coeff)


def default_grid(
    n_eff: float, q_mag: float, n_points: int = config.CONTOUR_N_POINTS, angle: float | None = None
) -> ContourGrid:
    rho_max = config.CONTOUR_RHO_MAX_FACTOR * n_eff / q_mag
    return ContourGrid(n_points=n_points, rho_max=rho_max, angle=angle if angle is not None else -math.pi / 4.0)


def _frobenius(nu: float, centrifugal: float, coulomb: complex, lam: complex, count: int) -> list[complex]:
    """Leading series coefficients of U = r^nu * sum c_m r^m for the operator
    -U'' + centrifugal/r^2 U + (coulomb/r) U = lam U."""
    c: list[complex] = [1.0 + 0j]
    for m in range(1, count + 1):
        prev2 = c[m - 2] if m >= 2 else 0.0
        denom = (nu + m) * (nu + m - 1) - centrifugal
        c.append((coulomb * c[m - 1] - lam * prev2) / denom)
    return c


def build_tridiagonal(
    l_eff: float,
    coulomb: complex,
    grid: ContourGrid,
    lam_hint: complex = 0.0,
    origin_correction: bool = True,
) -> Tridiagonal:
    """Rotated-contour stencil for -U'' + l_eff(l_eff+1)/r^2 U + (coulomb/r) U,
    assembled in the rho variable along r = rho*exp(i*angle)."""
    h = grid.spacing
    k = np.arange(1, grid.n_points + 1, dtype=float)
    rho = k * h
    theta = grid.angle
    ph2 = cmath.exp(-2j * theta)
    ph1 = cmath.exp(-1j * theta)
    centrifugal = l_eff * (l_eff + 1.0)
    diag = ph2 * (2.0 / h ** 2 + centrifugal / rho ** 2) + ph1 * coulomb / rho
    if origin_correction:
        nu = l_eff + 1.0
        c = _frobenius(nu, centrifugal, coulomb, lam_hint, 2)
        cm = [ci * cmath.exp(1j * m * theta) for m, ci in enumerate(c)]
        # keep the local model only inside its trust region
        amps = [abs(ci) ** (1.0 / m) for m, ci in enumerate(cm) if m >= 1 and abs(ci) > 0]
        rho_c = 0.5 / max(amps) if amps else grid.rho_max
        sel = rho <= rho_c
        if np.any(sel):
            ks, rs = k[sel], rho[sel]

            def fd_excess(s: float) -> np.ndarray:
                d2 = ((ks + 1.0) ** s - 2.0 * ks ** s + (ks - 1.0) ** s) * h ** (s - 2)
                return d2 - s * (s - 1.0) * rs ** (s - 2)

            local = sum(ci * rs ** (nu + m) for m, ci in enumerate(cm))
            corr = sum(ci * fd_excess(nu + m) for m, ci in enumerate(cm)) / local
            diag = diag.astype(complex)
            diag[sel] += ph2 * corr
    off = np.full(grid.n_points - 1, -ph2 / h ** 2, dtype=complex)
    return Tridiagonal(diag=diag.astype(complex), off=off)


def discretize(
    model: Model,
    channel: Channel,
    state: PrincipalState,
    couplings: Couplings,
    e_coeff: float,
    grid: ContourGrid,
    origin_correction: bool = True,
) -> Tridiagonal:
    """Contour matrix whose bound eigenvalue approximates E^2 - m^2, built
    with the effective Coulomb coefficient evaluated at energy e_coeff."""
    eff = effective_params(model, channel, state, couplings)
    B = couplings.m * couplings.a2 + couplings.a1 * e_coeff
    if B == 0.0:
        raise ValueError("B = m*a2 + a1*E vanishes: no discrete spectrum")
    lam_hint = e_coeff ** 2 - couplings.m ** 2
    return build_tridiagonal(
        eff.l_eff, -2j * B, grid, lam_hint=lam_hint, origin_correction=origin_correction
    )


def nearest_eigenvalue(
    matrix: Tridiagonal,
    shift: complex,
    max_iter: int = 200,
    tol: float = 1e-13,
    start: np.ndarray | None = None,
) -> complex:
    """Eigenvalue of the tridiagonal nearest to `shift`, via shift-inverted
    inverse iteration with a Rayleigh quotient in the unconjugated bilinear
    form (the natural pairing for a complex-symmetric matrix)."""
    n = matrix.n
    ab = np.zeros((3, n), dtype=complex)
    ab[0, 1:] = matrix.off
    ab[1] = matrix.diag - shift
    ab[2, :-1] = matrix.off
    if start is None:
        v = np.sin(np.pi * np.arange(1, n + 1) / (n + 1)).astype(complex)
    else:
        v = start.astype(complex)
    lam = shift
    for _ in range(max_iter):
        w = solve_banded((1, 1), ab, v)
        norm = np.sqrt(w @ w)
        if norm == 0.0:
            raise NotConverged("inverse iteration collapsed to zero vector")
        w = w / norm
        lam_new = (w @ matrix.matvec(w)) / (w @ w)
        if abs(lam_new - lam) < tol * max(1.0, abs(lam_new)):
            return lam_new
        lam, v = lam_new, w
    return lam


def _tracked_lambda(
    model, channel, state, couplings, energy: float, grid: ContourGrid, origin_correction=True
) -> complex:
    matrix = discretize(model, channel, state, couplings, energy, grid, origin_correction)
    lam_pred = energy ** 2 - couplings.m ** 2
    lam = nearest_eigenvalue(matrix, lam_pred)
    if abs(lam - lam_pred) > config.CONTOUR_TRUST_RADIUS * abs(lam_pred):
        raise LostTracking(
            f"nearest eigenvalue {lam:.6g} outside trust radius of {lam_pred:.6g}"
        )
    return lam


def self_consistent_energy(
    model: Model,
    channel: Channel,
    state: PrincipalState,
    couplings: Couplings,
    grid: ContourGrid | None = None,
    initial_guess: float | None = None,
    damping: float = 1.0,
) -> SelfConsistentResult:
    """Fixed point of E^2 - m^2 = lambda(E).

    The Coulomb coefficient B depends on E only through a1, so for a1 = 0 a
    single matrix solve settles the level.  Only Re(lambda) feeds the energy
    update; Im(lambda) is discretization noise in real-spectrum regimes.
    """
    m = couplings.m
    if initial_guess is None:
        raise ValueError("initial_guess is required")
    energy = initial_guess
    sign = 1.0 if energy >= 0.0 else -1.0
    eff = effective_params(model, channel, state, couplings)

    def make_grid(e: float) -> ContourGrid:
        B = m * couplings.a2 + couplings.a1 * e
        q_mag = abs(B) / eff.n_eff
        if grid is not None:
            return grid
        return ContourGrid(
            n_points=config.CONTOUR_N_POINTS,
            rho_max=config.CONTOUR_RHO_MAX_FACTOR * eff.n_eff / q_mag,
            angle=default_angle(B),
        )

    lam = energy ** 2 - m ** 2
    outer = 0
    g = make_grid(energy)
    for outer in range(1, config.CONTOUR_MAX_OUTER + 1):
        lam = _tracked_lambda(model, channel, state, couplings, energy, g)
        target = sign * math.sqrt(max(lam.real + m * m, 0.0))
        new_energy = energy + damping * (target - energy)
        step = abs(new_energy - energy)
        energy = new_energy
        if couplings.a1 == 0.0 or step < config.CONTOUR_OUTER_TOL * m:
            break
    else:
        raise NotConverged(f"no fixed point after {config.CONTOUR_MAX_OUTER} iterations")

    # Richardson error estimate from a half-resolution companion solve
    half = ContourGrid(n_points=max(g.n_points // 2, 100), rho_max=g.rho_max, angle=g.angle)
    lam_half = _tracked_lambda(model, channel, state, couplings, energy, half)
    est = 2.0 * abs(lam - lam_half) / 3.0  # |err(h)| ~ |diff|/3, x2 safety
    return SelfConsistentResult(
        energy_ratio=energy / m,
        lam=lam,
        outer_iterations=outer,
        grid_error_estimate=est,
    )


@dataclass(frozen=True)
class ConvergencePoint:
    spacing: float
    error: float


@dataclass(frozen=True)
class ConvergenceStudy:
    points: tuple
    orders: tuple
    monotone: bool


def convergence_study(
    model: Model,
    channel: Channel,
    state: PrincipalState,
    couplings: Couplings,
    closed_form_ratio: float,
    grids: list[ContourGrid],
) -> ConvergenceStudy:
    """Error against the closed-form level on a sequence of refined grids.

    The error measure is the complex distance |E_numeric - E_closed|, with
    E_numeric = sign * sqrt(lambda + m^2) taken as a complex square root so
    the imaginary (discretization-noise) part of lambda is counted; a
    truncated domain shows up as a non-monotone error sequence.
    """
    if len(grids) < 3:
        raise ValueError("need at least 3 grids")
    m = couplings.m
    sign = 1.0 if closed_form_ratio >= 0 else -1.0
    pts = []
    for g in grids:
        lam = _tracked_lambda(model, channel, state, couplings, closed_form_ratio * m, g)
        e_num = sign * cmath.sqrt(lam + m * m)
        pts.append(ConvergencePoint(spacing=g.spacing, error=abs(e_num - closed_form_ratio * m)))
    orders = []
    for a, b in zip(pts, pts[1:]):
        orders.append(math.log(a.error / b.error) / math.log(a.spacing / b.spacing))
    monotone = all(a.error > b.error for a, b in zip(pts, pts[1:]))
    return ConvergenceStudy(points=tuple(pts), orders=tuple(orders), monotone=monotone)
