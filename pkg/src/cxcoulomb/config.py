"""Shared numerical tolerances and grid defaults.

All tolerances assume IEEE double precision.  They are collected here so
tests and library code agree on a single set of constants.
"""

# Algebraic identities (exact up to rounding).
ALGEBRA_TOL = 1e-12

# Matrix identities: S * S^-1 = 1 and anticommutation of the Dirac set.
MATRIX_PRODUCT_TOL = 1e-13
ANTICOMMUTE_TOL = 1e-14

# Quantization-condition residual accepted for a valid closed-form level.
QUANTIZATION_TOL = 1e-10

# Relative width of the flown-away pole |n_eff^2 - a1^2| ~ 0 (and n_eff ~ 0).
FLOWN_AWAY_TOL = 1e-9

# Analytic eigenfunction: ODE residual ceiling at a quantized energy, and the
# internal q-consistency check -q^2 = E^2 - m^2.
ODE_RESIDUAL_TOL = 1e-8
Q_CONSISTENCY_TOL = 1e-10

# Coupled first-order system closure (4th-order finite differences).
CLOSURE_TOL = 1e-6

# Guard for dividing by xi1 and for a*a - b*b in the similarity transform.
SINGULAR_TOL = 1e-14

# Laguerre recurrence degree guard.
LAGUERRE_MAX_DEGREE = 200

# Contour solver defaults.
CONTOUR_N_POINTS = 2000
CONTOUR_RHO_MAX_FACTOR = 25.0   # rho_max = factor * n_eff / |q|
CONTOUR_OUTER_TOL = 1e-10       # |E_{k+1} - E_k| stopping threshold (units of m)
CONTOUR_MAX_OUTER = 50
CONTOUR_TRUST_RADIUS = 0.5      # fraction of |lambda_pred| for eigenvalue tracking

# Default sweep grids for the two figures (chosen to resolve the poles).
FIGURE1_GRID = (0.0, 5.0, 501)    # z_alpha: min, max, points
FIGURE2_GRID = (0.0, 10.0, 1001)  # A: min, max, points
