import numpy as np
import pytest

from cxcoulomb.errors import SingularTransform
from cxcoulomb.qnum import Couplings, gamma, make_channel
from cxcoulomb.transform import (
    BoostParams,
    alpha_dot,
    build_S,
    constraint_residuals,
    dirac_matrices,
    radial_coeffs,
    solve_theta,
)

CASES = [
    (make_channel(1, -1), Couplings(0.5, 0.5)),
    (make_channel(1, -1), Couplings(0.0, 0.6)),
    (make_channel(1, 1), Couplings(0.3, 0.5)),
    (make_channel(3, -1), Couplings(0.8, 0.4)),
    (make_channel(5, 1), Couplings(1.2, 0.9)),
]


@pytest.mark.parametrize("channel,couplings", CASES)
def test_boost_satisfies_constraints(channel, couplings):
    g = gamma(channel, couplings)
    boost = solve_theta(channel, couplings, g)
    r1, r2 = constraint_residuals(boost, channel, couplings, g)
    assert abs(r1) < 1e-13
    assert abs(r2) < 1e-13
    assert abs(boost.cosh_theta ** 2 - boost.sinh_theta ** 2 - 1.0) < 1e-13


@pytest.mark.parametrize("channel,couplings", CASES)
def test_ab_parametrization(channel, couplings):
    g = gamma(channel, couplings)
    boost = solve_theta(channel, couplings, g)
    assert abs(boost.a ** 2 - boost.b ** 2 - 1.0) < 1e-13
    assert abs(2.0 * boost.a * boost.b - boost.sinh_theta) < 1e-13


def test_dirac_matrices_algebra():
    mats = dirac_matrices()
    eye = np.eye(4)
    for name in ("alpha_x", "alpha_y", "alpha_z", "beta"):
        assert np.allclose(mats[name] @ mats[name], eye)
    for name in ("alpha_x", "alpha_y", "alpha_z"):
        anti = mats[name] @ mats["beta"] + mats["beta"] @ mats[name]
        assert np.max(np.abs(anti)) < 1e-14
    anti = mats["alpha_x"] @ mats["alpha_y"] + mats["alpha_y"] @ mats["alpha_x"]
    assert np.max(np.abs(anti)) < 1e-14


def test_alpha_dot_squares_to_identity():
    r_hat = np.array([1.0, 2.0, 2.0]) / 3.0
    ad = alpha_dot(r_hat)
    assert np.allclose(ad @ ad, np.eye(4))


@pytest.mark.parametrize("channel,couplings", CASES)
def test_build_S_inverse(channel, couplings):
    g = gamma(channel, couplings)
    boost = solve_theta(channel, couplings, g)
    r_hat = np.array([0.6, 0.0, 0.8])
    S, S_inv = build_S(boost.a, boost.b, r_hat)
    assert np.max(np.abs(S @ S_inv - np.eye(4))) < 1e-12


def test_build_S_rejects_singular():
    with pytest.raises(SingularTransform):
        build_S(1.0, 1.0, np.array([0.0, 0.0, 1.0]))
    with pytest.raises(ValueError):
        build_S(2.0, 1.0, np.array([0.0, 0.0, 2.0]))  # not a unit vector


@pytest.mark.parametrize("channel,couplings", CASES)
def test_xi1_one_over_r_part_cancels(channel, couplings):
    # the whole point of the boost: xi1 loses its 1/r part
    g = gamma(channel, couplings)
    boost = solve_theta(channel, couplings, g)
    coeffs = radial_coeffs(boost, channel, couplings, energy=1.1)
    assert abs(coeffs.xi1_over_r) < 1e-13
    # and the upper-equation 1/r coefficient becomes 1 + omega*gamma
    expected = 1.0 + channel.omega_tilde * g
    assert abs(coeffs.lhs5_over_r - expected) < 1e-12


def test_radial_coeffs_pairing():
    ch = make_channel(1, -1)
    cp = Couplings(0.3, 0.4)
    boost = solve_theta(ch, cp, gamma(ch, cp))
    coeffs = radial_coeffs(boost, ch, cp, energy=1.2)
    assert coeffs.xi1_const + coeffs.xi2_const == pytest.approx(2.0 * cp.m)
    assert abs(coeffs.lhs5_const + coeffs.lhs6_const) < 1e-15
    assert abs(coeffs.lhs5_over_r + coeffs.lhs6_over_r - 2.0) < 1e-13


def test_detuned_boost_violates_constraints():
    ch = make_channel(1, -1)
    cp = Couplings(0.3, 0.5)
    g = gamma(ch, cp)
    boost = solve_theta(ch, cp, g)
    bad = BoostParams(
        sinh_theta=boost.sinh_theta * 1.01,
        cosh_theta=boost.cosh_theta,
        a=boost.a,
        b=boost.b,
    )
    r1, r2 = constraint_residuals(bad, ch, cp, g)
    assert max(abs(r1), abs(r2)) > 1e-4
