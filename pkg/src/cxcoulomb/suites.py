"""Named verification suites shared by the CLI and the test battery.

Each check returns (name, passed, measured, bound); a suite is a list of
checks.  Random parameter draws are seeded for reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from .analytic_verify import build_eigenfunction, coupled_closure, ode_residual
from .eigensolve import eigenvalues
from .errors import BrokenRegime
from .qnum import (
    Couplings,
    Model,
    channel_with_l,
    effective_params,
    gamma,
    make_channel,
    make_state,
)
from .spectra import (
    KGCase,
    energy_case1,
    energy_case2,
    energy_case3,
    energy_general,
    energy_kg,
)
from .transform import constraint_residuals, solve_theta


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: float
    bound: float


def draw_real_gamma_params(rng: np.random.Generator, draws: int):
    """Seeded draws of (channel, couplings) restricted to real-gamma regimes,
    with 2j <= 9 and couplings in [0, 2]."""
    channels = {
        (tj, om): make_channel(tj, om) for tj in (1, 3, 5, 7, 9) for om in (-1, 1)
    }
    out = []
    while len(out) < draws:
        batch = 2 * (draws - len(out)) + 16
        two_j = rng.choice([1, 3, 5, 7, 9], size=batch)
        omega = rng.choice([-1, 1], size=batch)
        a1 = rng.uniform(0.0, 2.0, size=batch)
        a2 = rng.uniform(0.0, 2.0, size=batch)
        K = omega * (two_j + 1) // 2
        keep = np.flatnonzero(K ** 2 + a1 ** 2 - a2 ** 2 > 1e-6)[: draws - len(out)]
        for i in keep:
            ch = channels[(int(two_j[i]), int(omega[i]))]
            out.append((ch, Couplings(float(a1[i]), float(a2[i]))))
    return out


def suite_algebra(seed: int = 7, draws: int = 10000) -> list[Check]:
    """Identity checks over seeded random real-gamma parameter draws."""
    rng = np.random.default_rng(seed)
    params = draw_real_gamma_params(rng, draws)
    worst_unit = worst_c1 = worst_c2 = worst_leff = 0.0
    for ch, cp in params:
        g = gamma(ch, cp)
        boost = solve_theta(ch, cp, g)
        worst_unit = max(
            worst_unit, abs(boost.cosh_theta ** 2 - boost.sinh_theta ** 2 - 1.0)
        )
        r1, r2 = constraint_residuals(boost, ch, cp, g)
        worst_c1 = max(worst_c1, abs(r1))
        worst_c2 = max(worst_c2, abs(r2))
        l_eff = -0.5 + g + ch.omega_tilde / 2.0
        worst_leff = max(
            worst_leff, abs(l_eff * (l_eff + 1.0) - (g * g + ch.omega_tilde * g))
        )
    tol = config.ALGEBRA_TOL
    return [
        Check("cosh^2 - sinh^2 = 1", worst_unit < tol, worst_unit, tol),
        Check("xi1 1/r cancellation constraint", worst_c1 < tol, worst_c1, tol),
        Check("cross-coupling alignment constraint", worst_c2 < tol, worst_c2, tol),
        Check("l_eff(l_eff+1) = gamma^2 + omega*gamma", worst_leff < tol, worst_leff, tol),
    ]


def stock_residual_cases():
    """20 parameter sets spanning all four closed-form cases, n_r <= 4."""
    ch_a = make_channel(1, -1)
    ch_b = make_channel(1, 1)
    ch_c = make_channel(3, -1)
    cases = []
    # imaginary-vector only
    for n in (1, 2, 3):
        st = make_state(n, ch_a)
        cases.append((Model.DIRAC, ch_a, st, Couplings(0.6, 0.0),
                      energy_case1(ch_a, st, 0.6).ratio))
    # imaginary-scalar only (both branches)
    for n, branch in ((1, 0), (2, 0), (2, 1), (3, 0)):
        st = make_state(n, ch_a)
        cases.append((Model.DIRAC, ch_a, st, Couplings(0.0, 0.6),
                      energy_case2(ch_a, st, 0.6)[branch].ratio))
    # equal couplings
    for n in (1, 2, 3, 5):
        st = make_state(n, ch_a)
        cases.append((Model.DIRAC, ch_a, st, Couplings(0.5, 0.5),
                      energy_case3(n, 0.5).ratio))
    # mixed general + other channels
    for ch, n, cp in ((ch_b, 2, Couplings(0.3, 0.5)), (ch_c, 2, Couplings(0.8, 0.4)),
                      (ch_c, 3, Couplings(0.0, 0.6)), (ch_b, 3, Couplings(0.6, 0.0))):
        st = make_state(n, ch)
        levels, _ = energy_general(Model.DIRAC, ch, st, cp)
        ratio = next(l.ratio for l in levels if l.valid)
        cases.append((Model.DIRAC, ch, st, cp, ratio))
    # spin-0
    kg0 = channel_with_l(0)
    kg1 = channel_with_l(1)
    cases.append((Model.KLEIN_GORDON, kg0, make_state(1, kg0), Couplings(0.6, 0.0),
                  energy_kg(KGCase.A2_ZERO, 0, 1, 0.6)[0].ratio))
    cases.append((Model.KLEIN_GORDON, kg0, make_state(2, kg0), Couplings(0.0, 0.4),
                  energy_kg(KGCase.A1_ZERO, 0, 2, 0.4)[0].ratio))
    cases.append((Model.KLEIN_GORDON, kg0, make_state(3, kg0), Couplings(0.0, 0.4),
                  energy_kg(KGCase.A1_ZERO, 0, 3, 0.4)[1].ratio))
    cases.append((Model.KLEIN_GORDON, kg1, make_state(2, kg1), Couplings(0.5, 0.5),
                  energy_kg(KGCase.EQUAL, 1, 2, 0.5)[0].ratio))
    cases.append((Model.KLEIN_GORDON, kg1, make_state(4, kg1), Couplings(0.7, 0.0),
                  energy_kg(KGCase.A2_ZERO, 1, 4, 0.7)[0].ratio))
    assert len(cases) == 20
    return cases


def suite_residual() -> list[Check]:
    """Analytic-eigenfunction ODE residuals at quantized and detuned energies."""
    checks = []
    worst = 0.0
    worst_detuned = math.inf
    for model, ch, st, cp, ratio in stock_residual_cases():
        energy = ratio * cp.m
        fn = build_eigenfunction(model, ch, st, cp, energy)
        rep = ode_residual(fn, model, ch, st, cp, energy)
        worst = max(worst, rep.max_relative_residual)
        detuned = energy * 1.001
        fn_d = build_eigenfunction(model, ch, st, cp, detuned, check=False)
        rep_d = ode_residual(fn_d, model, ch, st, cp, detuned)
        worst_detuned = min(worst_detuned, rep_d.max_relative_residual)
    checks.append(Check("quantized ODE residual (20 cases)",
                        worst < config.ODE_RESIDUAL_TOL, worst, config.ODE_RESIDUAL_TOL))
    checks.append(Check("0.1% detuned residual exceeds 1e-4 (all cases)",
                        worst_detuned > 1e-4, worst_detuned, 1e-4))
    return checks


def stock_closure_cases():
    """5 stock cases for the coupled-system closure (nonzero boost, so the
    detuned-sinh control is meaningful)."""
    ch_a = make_channel(1, -1)
    ch_b = make_channel(1, 1)
    ch_c = make_channel(3, -1)
    ch_d = make_channel(3, 1)
    out = [
        (ch_a, make_state(1, ch_a), Couplings(0.0, 0.6), 1.25),
        (ch_a, make_state(1, ch_a), Couplings(0.6, 0.0),
         energy_case1(ch_a, make_state(1, ch_a), 0.6).ratio),
    ]
    st = make_state(2, ch_b)
    cp = Couplings(0.3, 0.5)
    levels, _ = energy_general(Model.DIRAC, ch_b, st, cp)
    out.append((ch_b, st, cp, next(l.ratio for l in levels if l.valid)))
    st = make_state(2, ch_c)
    cp = Couplings(0.8, 0.4)
    levels, _ = energy_general(Model.DIRAC, ch_c, st, cp)
    out.append((ch_c, st, cp, next(l.ratio for l in levels if l.valid)))
    st = make_state(3, ch_d)
    out.append((ch_d, st, Couplings(0.0, 0.6),
                energy_case2(ch_d, st, 0.6)[1].ratio))
    return out


def suite_closure() -> list[Check]:
    worst = 0.0
    worst_detuned = math.inf
    for ch, st, cp, ratio in stock_closure_cases():
        energy = ratio * cp.m
        rep = coupled_closure(ch, st, cp, energy)
        worst = max(worst, rep.max_relative_residual)
        rep_d = coupled_closure(ch, st, cp, energy, sinh_scale=1.01, richardson_check=False)
        worst_detuned = min(worst_detuned, rep_d.max_relative_residual)
    return [
        Check("coupled-system closure (5 cases)",
              worst < config.CLOSURE_TOL, worst, config.CLOSURE_TOL),
        Check("detuned-boost control exceeds 1e-3",
              worst_detuned > 1e-3, worst_detuned, 1e-3),
    ]


def leverrier_faddeev(a: np.ndarray) -> np.ndarray:
    """Characteristic polynomial coefficients (monic, descending) by the
    Leverrier-Faddeev trace recursion."""
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.array(a, dtype=complex)
    for k in range(1, n + 1):
        c = -np.trace(m) / k
        coeffs[k] = c
        if k < n:
            m = a @ (m + c * np.eye(n))
    return coeffs


def optimal_pair_distance(a, b) -> float:
    """Max distance under the optimal one-to-one matching of two multisets."""
    from scipy.optimize import linear_sum_assignment

    cost = np.abs(np.asarray(a)[:, None] - np.asarray(b)[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def suite_eig(seed: int = 11, draws: int = 100, max_dim: int = 12) -> list[Check]:
    """Random complex matrices against the characteristic-polynomial oracle."""
    rng = np.random.default_rng(seed)
    worst_pair = worst_trace = worst_det = 0.0
    for _ in range(draws):
        n = int(rng.integers(2, max_dim + 1))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        res = eigenvalues(a)
        if not res.converged:
            return [Check("eigensolver convergence", False, math.inf, 0.0)]
        oracle = np.roots(leverrier_faddeev(a))
        worst_pair = max(
            worst_pair,
            optimal_pair_distance(res.eigenvalues, oracle) / np.linalg.norm(a),
        )
        tr = np.trace(a)
        worst_trace = max(worst_trace, abs(sum(res.eigenvalues) - tr) / abs(tr))
        det = np.linalg.det(a)
        worst_det = max(
            worst_det, abs(np.prod(np.asarray(res.eigenvalues)) - det) / abs(det)
        )
    return [
        Check(f"eigenvalues vs char-poly oracle ({draws} matrices)",
              worst_pair < 1e-8, worst_pair, 1e-8),
        Check("trace consistency", worst_trace < 1e-10, worst_trace, 1e-10),
        Check("determinant consistency", worst_det < 1e-8, worst_det, 1e-8),
    ]


SUITES = {
    "algebra": lambda seed, draws: suite_algebra(seed=seed, draws=draws),
    "residual": lambda seed, draws: suite_residual(),
    "closure": lambda seed, draws: suite_closure(),
    "eig": lambda seed, draws: suite_eig(seed=seed),
}


def run_suites(names, seed: int = 7, draws: int = 10000) -> list[Check]:
    checks = []
    for name in names:
        checks.extend(SUITES[name](seed, draws))
    return checks
