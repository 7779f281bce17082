"""Acceptance battery: one test per headline guarantee, each asserting the
stated tolerance and runtime budget."""

import math
import time

import numpy as np
import pytest

from cxcoulomb.contour import ContourGrid, convergence_study, default_angle, self_consistent_energy
from cxcoulomb.qnum import Couplings, Model, channel_with_l, effective_params, make_channel, make_state
from cxcoulomb.spectra import (
    Branch,
    KGCase,
    energy_case1,
    energy_case1_special,
    energy_case2,
    energy_case3,
    energy_general,
    energy_kg,
    figure1_data,
    figure2_data,
)
from cxcoulomb.suites import (
    suite_algebra,
    suite_closure,
    suite_eig,
    suite_residual,
)


def _assert_all(checks):
    for check in checks:
        assert check.passed, (
            f"{check.name}: measured {check.measured:.3e} vs bound {check.bound:.3e}"
        )


def test_1_algebraic_identity_suite():
    t0 = time.perf_counter()
    checks = suite_algebra(seed=7, draws=10000)
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert elapsed < 1.0, f"algebra suite took {elapsed:.2f}s"


def test_2_cross_formula_equivalence():
    t0 = time.perf_counter()
    worst = 0.0

    # pure imaginary vector coupling: general quadratic vs dedicated form
    for ch, n in ((make_channel(1, -1), 1), (make_channel(1, -1), 3),
                  (make_channel(3, -1), 2), (make_channel(3, 1), 4)):
        st = make_state(n, ch)
        for za in np.linspace(0.05, 0.9, 250):
            direct = energy_case1(ch, st, float(za)).ratio
            levels, _ = energy_general(Model.DIRAC, ch, st, Couplings(float(za), 0.0))
            general = next(l.ratio for l in levels if l.valid)
            worst = max(worst, abs(direct - general))

    # the n = j + 1/2 tower collapses to the special closed form
    for n in (1, 2, 3, 4):
        ch = make_channel(2 * n - 1, -1)
        st = make_state(n, ch)
        for za in np.linspace(0.05, 0.9, 250):
            special = energy_case1_special(n, float(za)).ratio
            direct = energy_case1(ch, st, float(za)).ratio
            worst = max(worst, abs(special - direct))

    # pure imaginary scalar coupling: symmetric pair
    for ch, n in ((make_channel(1, -1), 1), (make_channel(1, -1), 2),
                  (make_channel(3, -1), 2), (make_channel(3, 1), 3)):
        st = make_state(n, ch)
        for a2 in np.linspace(0.05, 0.9, 250):
            pair = energy_case2(ch, st, float(a2))
            levels, _ = energy_general(Model.DIRAC, ch, st, Couplings(0.0, float(a2)))
            for lev in levels:
                mate = next(p for p in pair if p.branch is lev.branch)
                worst = max(worst, abs(lev.ratio - mate.ratio))

    # equal couplings
    for n in (1, 2, 3, 4):
        ch = make_channel(1, -1)
        st = make_state(n, ch)
        for a in np.linspace(0.05, 0.9 * n, 250):
            direct = energy_case3(n, float(a)).ratio
            levels, _ = energy_general(Model.DIRAC, ch, st, Couplings(float(a), float(a)))
            general = next(l.ratio for l in levels if l.valid)
            worst = max(worst, abs(direct - general))

    # spin-0: the general quadratic vs the three dedicated coupling lines
    for l, n in ((0, 1), (0, 2), (1, 2), (1, 3)):
        ch = channel_with_l(l)
        st = make_state(n, ch)
        for c in np.linspace(0.05, 0.45, 250):
            c = float(c)
            for case, couplings in (
                (KGCase.A2_ZERO, Couplings(c, 0.0)),
                (KGCase.A1_ZERO, Couplings(0.0, c)),
                (KGCase.EQUAL, Couplings(c, c)),
            ):
                direct = energy_kg(case, l, n, c)
                levels, _ = energy_general(Model.KLEIN_GORDON, ch, st, couplings)
                for lev in direct:
                    mate = next(g for g in levels if g.branch is lev.branch)
                    worst = max(worst, abs(lev.ratio - mate.ratio))

    elapsed = time.perf_counter() - t0
    assert worst < 1e-12, f"worst cross-formula discrepancy {worst:.3e}"
    assert elapsed < 1.0, f"equivalence sweep took {elapsed:.2f}s"


def test_3_exact_rational_spot_checks():
    # equal couplings, ground state, a = 1/2
    lev = energy_case3(1, 0.5)
    assert abs(lev.ratio - 5.0 / 3.0) < 1e-15
    b = 0.5 + 0.5 * lev.ratio  # coulomb coefficient m*a2 + a1*E
    assert abs(b - 4.0 / 3.0) < 1e-15
    lam = lev.ratio ** 2 - 1.0
    assert abs(lam - 16.0 / 9.0) < 1e-15

    # scalar-only ground state, a2 = 0.6
    ch = make_channel(1, -1)
    st = make_state(1, ch)
    pair = energy_case2(ch, st, 0.6)
    assert abs(pair[0].ratio - 1.25) < 1e-15
    assert abs(pair[1].ratio + 1.25) < 1e-15
    eff = effective_params(Model.DIRAC, ch, st, Couplings(0.0, 0.6))
    assert abs(eff.n_eff - 0.8) < 1e-15

    # zero coupling: the energy ratio is exactly 1
    levels, _ = energy_general(Model.DIRAC, ch, st, Couplings(0.0, 0.0))
    assert levels[0].ratio == 1.0


def test_4_figure1_reproduction():
    t0 = time.perf_counter()
    n_list = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50)
    series = figure1_data(n_list=n_list)
    elapsed = time.perf_counter() - t0
    grid = series[0].abscissa
    cols = np.array([s.ordinate for s in series])  # shape (len(n_list), len(grid))
    positive = [i for i, za in enumerate(grid) if za > 0]
    # monotone decrease in n at every fixed z_alpha > 0
    assert np.all(np.diff(cols[:, positive], axis=0) < 0)
    i_one = grid.index(1.0)
    assert cols[-1, i_one] - 1.0 < 3e-4  # n = 50 hugs the threshold
    assert elapsed < 1.0, f"figure 1 sweep took {elapsed:.2f}s"


def test_5_figure2_reproduction():
    t0 = time.perf_counter()
    series = figure2_data(n_list=(1, 2, 3, 4, 5, 6))
    elapsed = time.perf_counter() - t0
    for n, s in zip((1, 2, 3, 4, 5, 6), series):
        grid = np.array(s.abscissa)
        vals = np.array(s.ordinate)
        pole = np.where(np.abs(grid - n) < 1e-9)[0]
        assert len(pole) == 1 and int(pole[0]) in s.gaps
        assert math.isnan(vals[pole[0]])
        beyond = grid > n
        tail = vals[beyond]
        assert np.all(tail < -1.0)
        assert np.all(np.diff(tail) > 0.0)  # strictly increasing toward -1
    i_ten = series[0].abscissa.index(10.0)
    assert abs(series[0].ordinate[i_ten] - (-101.0 / 99.0)) < 1e-12
    assert elapsed < 1.0, f"figure 2 sweep took {elapsed:.2f}s"


def test_6_ode_residual_oracle():
    t0 = time.perf_counter()
    checks = suite_residual()
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert elapsed < 5.0, f"residual suite took {elapsed:.2f}s"


def test_7_coupled_system_closure():
    t0 = time.perf_counter()
    checks = suite_closure()
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert elapsed < 10.0, f"closure suite took {elapsed:.2f}s"


def test_8_eigensolver_correctness():
    t0 = time.perf_counter()
    checks = suite_eig(seed=11, draws=100, max_dim=12)
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert elapsed < 10.0, f"eigensolver suite took {elapsed:.2f}s"


def _contour_cases():
    ch = make_channel(1, -1)
    kg = channel_with_l(0)
    return [
        ("scalar-only n=1", Model.DIRAC, ch, make_state(1, ch), Couplings(0.0, 0.6),
         energy_case2(ch, make_state(1, ch), 0.6)[0].ratio),
        ("equal n=1", Model.DIRAC, ch, make_state(1, ch), Couplings(0.5, 0.5),
         energy_case3(1, 0.5).ratio),
        ("equal n=2", Model.DIRAC, ch, make_state(2, ch), Couplings(0.5, 0.5),
         energy_case3(2, 0.5).ratio),
        ("vector-only n=1", Model.DIRAC, ch, make_state(1, ch), Couplings(0.6, 0.0),
         energy_case1(ch, make_state(1, ch), 0.6).ratio),
        ("spin-0 l=0 n=1", Model.KLEIN_GORDON, kg, make_state(1, kg), Couplings(0.0, 0.4),
         energy_kg(KGCase.A1_ZERO, 0, 1, 0.4)[0].ratio),
    ]


def test_9_contour_solver_end_to_end():
    t0 = time.perf_counter()
    for label, model, ch, st, cp, exact in _contour_cases():
        eff = effective_params(model, ch, st, cp)
        b = cp.m * cp.a2 + cp.a1 * exact * cp.m
        q_mag = abs(b) / eff.n_eff
        rho_max = 25.0 * eff.n_eff / q_mag
        angle = default_angle(b)
        grids = [ContourGrid(n_points=n, rho_max=rho_max, angle=angle)
                 for n in (1000, 2000, 4000)]
        study = convergence_study(model, ch, st, cp, exact, grids)
        assert study.points[-1].error <= 1e-4, (
            f"{label}: error {study.points[-1].error:.3e} at finest grid"
        )
        assert study.monotone, f"{label}: error not monotone under refinement"
        for order in study.orders:
            assert 1.7 <= order <= 2.3, f"{label}: observed order {order:.2f}"
        result = self_consistent_energy(
            model, ch, st, cp, grid=grids[-1], initial_guess=exact * cp.m
        )
        assert abs(result.energy_ratio - exact) <= 1e-4, label
        assert abs(result.lam.imag) < result.grid_error_estimate, (
            f"{label}: Im(lambda) {result.lam.imag:.3e} above grid error "
            f"{result.grid_error_estimate:.3e}"
        )
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"contour battery took {elapsed:.1f}s"
