"""Exception types shared across the package."""


class EllgenusError(Exception):
    """Base class for all package-specific errors."""


class PoleAtOne(EllgenusError):
    """A denominator vanishes at s = 1 (or w = 1 in the perturbed layer)."""


class NonUnitLeadingTerm(EllgenusError):
    """A q-series with vanishing constant term cannot be inverted."""


class OutOfRange(EllgenusError, IndexError):
    """Requested q-exponent lies outside the truncation order."""


class ZeroArgument(EllgenusError):
    """Sigma factor with zero scalar argument has no invertible lead."""


class LogCanonicalPole(EllgenusError):
    """Correction factor requested at coefficient -1."""


class SingularIntersectionMatrix(EllgenusError):
    """The exceptional intersection pairing is degenerate."""


class InvalidPoint(EllgenusError):
    """Blow-up center does not exist on the model."""


class VeysHypothesisViolated(EllgenusError):
    """A -1 vertex is not a bridge meeting its neighbors once."""


class TDependence(EllgenusError):
    """Localization sum failed to be independent of the torus weight."""


class InvalidTau(EllgenusError):
    """tau must lie in the upper half plane."""


class ConfigError(EllgenusError):
    """Configuration file is malformed; carries a line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
