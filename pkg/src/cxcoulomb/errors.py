"""Classified failure modes.

These are first-class outcomes, not silent NaNs: callers are expected to
branch on them (the spectrum routines catch BrokenRegime / InvalidState and
turn them into regime reports).
"""


class CxCoulombError(Exception):
    """Base class for all classified failures."""


class BrokenRegime(CxCoulombError):
    """The centrifugal radicand K^2 + a1^2 - a2^2 (or its spin-0 analogue)
    is not positive: the effective angular momentum turns complex and the
    real discrete spectrum is lost."""

    def __init__(self, radicand: float, detail: str = ""):
        self.radicand = radicand
        super().__init__(detail or f"non-positive radicand {radicand:.6g}")


class InvalidState(CxCoulombError):
    """Effective principal quantum number n_eff <= 0: the level has left
    the discrete spectrum."""


class SingularTransform(CxCoulombError):
    """a^2 - b^2 ~ 0: the similarity transformation is not invertible."""


class InconsistentLevel(CxCoulombError):
    """Candidate energy fails the internal check -q^2 = E^2 - m^2."""


class NotConverged(CxCoulombError):
    """An iteration hit its cap without meeting its stopping criterion."""

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class LostTracking(CxCoulombError):
    """No matrix eigenvalue lies within the trust radius of the running
    prediction; the fixed-point iteration cannot continue safely."""


class GridTooCoarse(CxCoulombError):
    """Finite-difference error estimate exceeds the requested tolerance."""
