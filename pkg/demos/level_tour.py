"""Narrative tour of the closed-form spectra.

Walks the three special coupling lines of the spin-1/2 problem and the
spin-0 analogue, printing the real bound levels and showing what happens at
the critical couplings (flown-away poles and the broken regime).

Run:  python3 demos/level_tour.py
"""

import numpy as np

from cxcoulomb import (
    BrokenRegime,
    Couplings,
    InvalidState,
    KGCase,
    Model,
    energy_case2,
    energy_case3,
    energy_general,
    energy_kg,
    make_channel,
    make_state,
)


def main():
    ch = make_channel(1, -1)  # j = 1/2, l = 0, K = -1

    print("=== Imaginary vector coupling only (a2 = 0) ===")
    print("All levels sit above E = +m; there is no negative branch.")
    for za in (0.2, 0.6, 0.9):
        st = make_state(1, ch)
        levels, _ = energy_general(Model.DIRAC, ch, st, Couplings(za, 0.0))
        valid = [l for l in levels if l.valid]
        print(f"  Z*alpha = {za:.1f}:  E/m = {valid[0].ratio:+.6f}")

    print()
    print("=== Imaginary scalar coupling only (a1 = 0) ===")
    print("Levels come in symmetric +- pairs outside the energy gap.")
    st = make_state(1, ch)
    for a2 in (0.3, 0.6, 0.9):
        pair = energy_case2(ch, st, a2)
        print(f"  a2 = {a2:.1f}:  E/m = {pair[0].ratio:+.6f}, {pair[1].ratio:+.6f}")
    print("Beyond a2 = |K| the parameter gamma turns imaginary (broken phase):")
    try:
        energy_case2(ch, st, 1.5)
    except BrokenRegime as exc:
        print(f"  a2 = 1.5 raises BrokenRegime (radicand {exc.radicand:+.2f})")

    print()
    print("=== Equal couplings a1 = a2 = a ===")
    print("E/m = 1 + 2a^2/(n^2 - a^2); the level flies away at a = n and")
    print("re-enters below -m, clustering just under the negative continuum.")
    for a in (0.5, 0.99, 1.5, 5.0, 10.0):
        try:
            lev = energy_case3(1, a)
            print(f"  a = {a:5.2f}:  E/m = {lev.ratio:+.6f}")
        except InvalidState:
            print(f"  a = {a:5.2f}:  flown away (pole at a = n)")

    print()
    print("=== Spin-0 analogue ===")
    for case, c in ((KGCase.A2_ZERO, 0.6), (KGCase.A1_ZERO, 0.4), (KGCase.EQUAL, 0.5)):
        levels = energy_kg(case, l=0, n=1, coupling=c)
        shown = ", ".join(f"{l.ratio:+.6f}" for l in levels)
        print(f"  {case.value:7s} coupling {c:.1f}:  E/m = {shown}")

    print()
    print("=== Large-n limit (threshold clustering) ===")
    for n in (1, 5, 50):
        chn = make_channel(2 * n - 1, -1)
        stn = make_state(n, chn)
        levels, _ = energy_general(Model.DIRAC, chn, stn, Couplings(1.0, 0.0))
        print(f"  n = {n:2d}:  E/m - 1 = {levels[0].ratio - 1.0:.3e}")


if __name__ == "__main__":
    main()
