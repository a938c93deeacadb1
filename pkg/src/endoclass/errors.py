"""Exception hierarchy.

Three broad families, matching the CLI exit codes: validation errors (bad
input data, exit 2), pipeline errors (a well-formed packet the math rejects,
exit 3), and invariant violations (internal self-checks that must never fire
on correct code, exit 4).
"""


class EndoclassError(Exception):
    """Base class for every error raised by this package."""


# --- validation (exit 2) ---------------------------------------------------

class ValidationError(EndoclassError):
    pass


class SchemaError(ValidationError):
    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class FieldNotTotallyReal(ValidationError):
    pass


class EvenDegreeBaseField(ValidationError):
    pass


class BadPrimeLabel(ValidationError):
    pass


class GrammarError(ValidationError):
    def __init__(self, message, line=None, column=None):
        loc = "" if line is None else f"line {line}" + ("" if column is None else f", col {column}")
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.column = column


class PrimeMatchFailed(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class SquareDiscriminant(ValidationError):
    pass


# --- pipeline / arithmetic (exit 3) ----------------------------------------

class PipelineError(EndoclassError):
    """Wrapper attributing a failure to a named pipeline stage."""

    def __init__(self, stage, cause):
        super().__init__(f"stage '{stage}': {cause}")
        self.stage = stage
        self.cause = cause


class ZeroPolynomial(EndoclassError):
    pass


class ZeroElement(EndoclassError):
    pass


class ZeroEntry(EndoclassError):
    pass


class NonIntegralElement(EndoclassError):
    pass


class NotSquarefree(EndoclassError):
    pass


class PrimitiveElementSearchExhausted(EndoclassError):
    pass


class NotRingHomomorphism(EndoclassError):
    pass


class DoesNotFixSubfield(EndoclassError):
    pass


class IndexDivisorUnsupported(EndoclassError):
    pass


class DyadicPrime(EndoclassError):
    pass


class EmptyTable(EndoclassError):
    pass


class TableTooSmall(EndoclassError):
    pass


class InconsistentTwist(EndoclassError):
    pass


class NonTwoTorsionGroup(EndoclassError):
    pass


class DiscriminantNotFound(EndoclassError):
    pass


class AmbiguousDiscriminant(EndoclassError):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class FrobeniusNotFound(EndoclassError):
    pass


class FieldMismatch(EndoclassError):
    pass


class PrecisionBelowThreshold(EndoclassError):
    pass


# --- invariant violations (exit 4) ------------------------------------------

class InvariantViolation(EndoclassError):
    """An internal self-check failed; never suppressed or auto-corrected."""


class ReciprocityViolation(InvariantViolation):
    pass
