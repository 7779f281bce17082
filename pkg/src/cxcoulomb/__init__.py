"""Exact bound levels of spin-1/2 and spin-0 particles in imaginary
Coulombic fields, with two independent numerical verification engines."""

from .qnum import (
    Channel,
    Couplings,
    EffectiveParams,
    Model,
    PrincipalState,
    channel_with_l,
    effective_params,
    gamma,
    make_channel,
    make_state,
)
from .spectra import (
    Branch,
    EnergyLevel,
    KGCase,
    Regime,
    RegimeReport,
    SeriesData,
    energy_case1,
    energy_case1_special,
    energy_case2,
    energy_case3,
    energy_general,
    energy_kg,
    figure1_data,
    figure2_data,
)
from .transform import BoostParams, RadialCoeffs, build_S, radial_coeffs, solve_theta
from .analytic_verify import (
    RadialEigenfunction,
    ResidualReport,
    build_eigenfunction,
    coupled_closure,
    ode_residual,
)
from .eigensolve import EigenResult, eigenvalues
from .contour import (
    ContourGrid,
    ConvergenceStudy,
    SelfConsistentResult,
    Tridiagonal,
    convergence_study,
    self_consistent_energy,
)
from .errors import (
    BrokenRegime,
    CxCoulombError,
    GridTooCoarse,
    InconsistentLevel,
    InvalidState,
    LostTracking,
    NotConverged,
    SingularTransform,
)

__version__ = "0.1.0"

__all__ = [
    "Branch", "BrokenRegime", "BoostParams", "Channel", "ContourGrid",
    "ConvergenceStudy", "Couplings", "CxCoulombError", "EffectiveParams",
    "EigenResult", "EnergyLevel", "GridTooCoarse", "InconsistentLevel",
    "InvalidState", "KGCase", "LostTracking", "Model", "NotConverged",
    "PrincipalState", "RadialCoeffs", "RadialEigenfunction", "Regime",
    "RegimeReport", "ResidualReport", "SelfConsistentResult", "SeriesData",
    "SingularTransform", "Tridiagonal", "build_S", "build_eigenfunction",
    "channel_with_l", "convergence_study", "coupled_closure",
    "effective_params", "eigenvalues", "energy_case1", "energy_case1_special",
    "energy_case2", "energy_case3", "energy_general", "energy_kg",
    "figure1_data", "figure2_data", "gamma", "make_channel", "make_state",
    "ode_residual", "radial_coeffs", "self_consistent_energy", "solve_theta",
]
