import math

import pytest

from cxcoulomb.errors import InvalidState
from cxcoulomb.qnum import Couplings, Model, channel_with_l, make_channel, make_state
from cxcoulomb.spectra import (
    Branch,
    KGCase,
    Regime,
    energy_case1,
    energy_case1_special,
    energy_case2,
    energy_case3,
    energy_general,
    energy_kg,
    figure1_data,
    figure2_data,
    quantization_residual,
)

CH = make_channel(1, -1)


def test_zero_coupling_threshold():
    levels, report = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(0.0, 0.0))
    assert report.regime is Regime.THRESHOLD
    assert len(levels) == 1 and levels[0].ratio == 1.0 and levels[0].valid


def test_equal_coupling_exact_rational():
    lev = energy_case3(1, 0.5)
    assert lev.ratio == pytest.approx(5.0 / 3.0, abs=1e-15)
    # E = -m root rejected: only the positive branch is valid in general form
    levels, report = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(0.5, 0.5))
    assert report.regime is Regime.REGULAR
    valid = [l for l in levels if l.valid]
    assert len(valid) == 1 and valid[0].branch is Branch.PLUS
    assert valid[0].ratio == pytest.approx(5.0 / 3.0, abs=1e-14)


def test_scalar_only_symmetric_pair():
    pair = energy_case2(CH, make_state(1, CH), 0.6)
    assert pair[0].ratio == pytest.approx(1.25, abs=1e-15)
    assert pair[1].ratio == pytest.approx(-1.25, abs=1e-15)
    levels, _ = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(0.0, 0.6))
    assert all(l.valid for l in levels)
    assert sorted(l.ratio for l in levels) == pytest.approx([-1.25, 1.25], abs=1e-14)


def test_vector_only_positive_branch_only():
    lev = energy_case1(CH, make_state(1, CH), 0.6)
    levels, _ = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(0.6, 0.0))
    valid = [l for l in levels if l.valid]
    assert len(valid) == 1 and valid[0].branch is Branch.PLUS
    assert valid[0].ratio == pytest.approx(lev.ratio, abs=1e-14)
    # the negative root fails the sign condition of the quantization rule
    neg = next(l for l in levels if l.branch is Branch.MINUS)
    assert not neg.valid


def test_special_tower_matches_general():
    # states with n = j + 1/2 collapse to E/m = sqrt(1 + (z_alpha/n)^2)
    for n in (1, 2, 3):
        ch = make_channel(2 * n - 1, -1)
        st = make_state(n, ch)
        special = energy_case1_special(n, 0.9)
        general = energy_case1(ch, st, 0.9)
        assert special.ratio == pytest.approx(general.ratio, abs=1e-14)
        assert special.ratio == pytest.approx(math.sqrt(1.0 + (0.9 / n) ** 2), abs=1e-15)


def test_flown_away_pole():
    with pytest.raises(InvalidState):
        energy_case3(2, 2.0)
    _, report = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(1.0, 1.0))
    assert report.regime is Regime.FLOWN_AWAY


def test_broken_regime():
    _, report = energy_general(Model.DIRAC, CH, make_state(1, CH), Couplings(0.0, 1.5))
    assert report.regime is Regime.BROKEN


def test_quantization_residual_rejects_gap_states():
    res, rhs_pos = quantization_residual(0.5, 1.0, Couplings(0.5, 0.5))
    assert math.isinf(res)
    assert rhs_pos


def test_kg_cases():
    out = energy_kg(KGCase.A1_ZERO, 0, 1, 0.4)
    ch = channel_with_l(0)
    levels, _ = energy_general(Model.KLEIN_GORDON, ch, make_state(1, ch), Couplings(0.0, 0.4))
    assert sorted(l.ratio for l in out) == pytest.approx(
        sorted(l.ratio for l in levels), abs=1e-14
    )
    eq = energy_kg(KGCase.EQUAL, 0, 1, 0.5)
    assert eq[0].ratio == pytest.approx(1.0 + 0.5 / (1.0 - 0.25), abs=1e-14)
    with pytest.raises(InvalidState):
        energy_kg(KGCase.EQUAL, 0, 2, 2.0)


def test_figure1_data_shape_and_limits():
    series = figure1_data(n_list=(1, 2, 50))
    assert [s.label for s in series] == ["n=1", "n=2", "n=50"]
    assert series[0].ordinate[0] == 1.0  # z_alpha = 0
    i_one = series[0].abscissa.index(1.0)
    assert series[0].ordinate[i_one] == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert series[2].ordinate[i_one] - 1.0 < 3e-4


def test_figure2_data_gap_and_tail():
    series = figure2_data(n_list=(1,))
    s = series[0]
    i_pole = s.abscissa.index(1.0)
    assert i_pole in s.gaps
    assert math.isnan(s.ordinate[i_pole])
    i_ten = s.abscissa.index(10.0)
    assert s.ordinate[i_ten] == pytest.approx(-101.0 / 99.0, abs=1e-12)
