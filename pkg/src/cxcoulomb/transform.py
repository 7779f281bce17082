"""Similarity-transformation algebra.

The boost parameters sinh(theta), cosh(theta) decouple the radial system by
killing the 1/r part of xi1 and turning the cross coupling K*cosh + i*a1*sinh
into omega_tilde*gamma.  The pair (a, b) realising S = a + i*b*beta*(alpha.rhat)
is fixed by the normalization a^2 - b^2 = 1 with a on the principal branch.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import SingularTransform
from .qnum import Channel, Couplings


@dataclass(frozen=True)
class BoostParams:
    sinh_theta: complex
    cosh_theta: complex
    a: complex
    b: complex


@dataclass(frozen=True)
class RadialCoeffs:
    """Coefficients of the coupled first-order radial system.

    Upper equation: [d/dr + lhs5_over_r/r + lhs5_const] R = xi1 Q with
    xi1(r) = xi1_const + xi1_over_r/r, and analogously for the lower one.
    """

    xi1_const: complex
    xi1_over_r: complex
    xi2_const: complex
    xi2_over_r: complex
    lhs5_over_r: complex
    lhs5_const: complex
    lhs6_over_r: complex
    lhs6_const: complex


def solve_theta(channel: Channel, couplings: Couplings, gamma: float) -> BoostParams:
    """Boost parameters removing the 1/r term of xi1 and aligning the cross
    coupling with omega_tilde*gamma."""
    K = channel.K
    a1, a2 = couplings.a1, couplings.a2
    denom = K * K + a1 * a1
    if denom <= 0.0:
        raise ValueError("K^2 + a1^2 must be positive")
    sinh_theta = -1j * channel.omega_tilde * (a1 * gamma - abs(K) * a2) / denom
    cosh_theta = (abs(K) * gamma + a1 * a2) / denom + 0j
    a = cmath.sqrt((1.0 + cosh_theta) / 2.0)
    b = sinh_theta / (2.0 * a)
    return BoostParams(sinh_theta=sinh_theta, cosh_theta=cosh_theta, a=a, b=b)


def constraint_residuals(
    params: BoostParams, channel: Channel, couplings: Couplings, gamma: float
) -> tuple[complex, complex]:
    """Residuals of the two defining constraints; both vanish for the boost
    returned by solve_theta."""
    K = channel.K
    a1, a2 = couplings.a1, couplings.a2
    r1 = -1j * a2 + 1j * a1 * params.cosh_theta + K * params.sinh_theta
    r2 = K * params.cosh_theta + 1j * a1 * params.sinh_theta - channel.omega_tilde * gamma
    return r1, r2


def radial_coeffs(
    params: BoostParams, channel: Channel, couplings: Couplings, energy: float
) -> RadialCoeffs:
    """All coefficients of the coupled radial system at the given energy."""
    K = channel.K
    a1, a2, m = couplings.a1, couplings.a2, couplings.m
    ch, sh = params.cosh_theta, params.sinh_theta
    return RadialCoeffs(
        xi1_const=m + energy * ch,
        xi1_over_r=-1j * a2 + 1j * a1 * ch + K * sh,
        xi2_const=m - energy * ch,
        xi2_over_r=-1j * a2 - 1j * a1 * ch - K * sh,
        lhs5_over_r=1.0 + K * ch + 1j * a1 * sh,
        lhs5_const=energy * sh,
        lhs6_over_r=1.0 - K * ch - 1j * a1 * sh,
        lhs6_const=-energy * sh,
    )


def dirac_matrices() -> dict[str, np.ndarray]:
    """Standard (Dirac) representation of alpha_x, alpha_y, alpha_z, beta."""
    s = {
        "x": np.array([[0, 1], [1, 0]], dtype=complex),
        "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    zero = np.zeros((2, 2), dtype=complex)
    eye = np.eye(2, dtype=complex)
    alphas = {
        k: np.block([[zero, sk], [sk, zero]]) for k, sk in s.items()
    }
    beta = np.block([[eye, zero], [zero, -eye]])
    return {"alpha_x": alphas["x"], "alpha_y": alphas["y"], "alpha_z": alphas["z"], "beta": beta}


def alpha_dot(r_hat: np.ndarray, mats: dict[str, np.ndarray] | None = None) -> np.ndarray:
    mats = mats or dirac_matrices()
    return (
        r_hat[0] * mats["alpha_x"]
        + r_hat[1] * mats["alpha_y"]
        + r_hat[2] * mats["alpha_z"]
    )


def build_S(a: complex, b: complex, r_hat) -> tuple[np.ndarray, np.ndarray]:
    """The 4x4 transformation S = a + i*b*beta*(alpha.rhat) and its inverse."""
    r_hat = np.asarray(r_hat, dtype=float)
    if abs(np.linalg.norm(r_hat) - 1.0) > 1e-12:
        raise ValueError("r_hat must be a unit vector")
    det = a * a - b * b
    if abs(det) < config.SINGULAR_TOL:
        raise SingularTransform(f"a^2 - b^2 = {det:.3e}")
    mats = dirac_matrices()
    bar = mats["beta"] @ alpha_dot(r_hat, mats)
    eye = np.eye(4, dtype=complex)
    S = a * eye + 1j * b * bar
    S_inv = (a * eye - 1j * b * bar) / det
    return S, S_inv
