"""Exception types shared across the package."""


class MtcatError(Exception):
    """Base class for all errors raised by mtcat."""


class InputError(MtcatError):
    """Bad argument: unknown label, invalid parameter, inadmissible tuple."""


class ParseError(MtcatError):
    """A category file could not be parsed at all (malformed syntax)."""


class SchemaError(MtcatError):
    """A category file parsed but violates the file schema."""


class ValidationError(MtcatError):
    """Structural data violates a fusion-ring or symbol invariant.

    Carries the list of violations (each a ``Violation``) when raised by a
    validator, so callers can report every witness at once.
    """

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations) if violations else []


class IncompleteData(MtcatError):
    """An admissible F/R entry is missing; ``key`` names the offending tuple."""

    def __init__(self, key, kind="F"):
        super().__init__(f"missing admissible {kind} entry for {key}")
        self.key = key
        self.kind = kind


class DegenerateSMatrix(MtcatError):
    """The S-matrix passed to the fusion-coefficient formula is singular."""


class RigidityDegenerate(MtcatError):
    """The unit-channel fusing element vanishes; dual data is inconsistent."""


class WeightsInconsistent(MtcatError):
    """Supplied conformal weights disagree with the twist computed from braiding."""


class ComputationError(MtcatError):
    """A numerical routine failed (e.g. eigensolver did not converge)."""
