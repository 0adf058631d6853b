"""Exception hierarchy shared by every module."""


class MellinSumError(Exception):
    """Base class for all library errors."""


class DomainError(MellinSumError, ValueError):
    """Argument lies on a pole or branch point, or outside a function's domain."""


class PrecisionOverflow(MellinSumError):
    """Requested precision or exponent range exceeds the configured ceiling."""


class PrecisionCeiling(PrecisionOverflow):
    """Escalation would need more working digits than allowed."""


class UnstableEvaluation(MellinSumError):
    """Two runs at different precision disagree below the target digits."""

    def __init__(self, message, agreed_digits=None):
        super().__init__(message)
        self.agreed_digits = agreed_digits


class ConvergenceError(MellinSumError):
    """A series needs more terms than the configured ceiling."""


class SlowDecay(ConvergenceError):
    """Imaginary-pole residue series decays too slowly (a too close to 1)."""

    def __init__(self, message, required_terms=None):
        super().__init__(message)
        self.required_terms = required_terms


class DecayViolation(MellinSumError):
    """Measured integrand samples exceed the decay certificate."""


class PoleOnContour(MellinSumError):
    """An unflagged singularity was detected on the integration line."""


class NonIntegrableSingularity(MellinSumError):
    """Real part of the integrand diverges at a flagged on-line pole."""


class ResidueMismatch(MellinSumError):
    """Contour shift and residue list are inconsistent."""


class InvalidParams(MellinSumError, ValueError):
    """Parameters violate an identity's validity predicate."""


class EvaluationFailed(MellinSumError):
    """One side of an identity could not be evaluated."""

    def __init__(self, message, side=None, cause=None):
        super().__init__(message)
        self.side = side
        self.cause = cause
